#pragma once

#include "lnd/derivation.hpp"
#include "lnd/errors.hpp"
#include "lnd/ring.hpp"
#include "lnd/term_order.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lnd {

/// Malformed fixture file or an expectation that names something undeclared.
class FixtureError : public Error {
public:
    FixtureError(const std::string& message, int line)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Values of the TOML subset used by fixtures.
using FixtureValue = std::variant<std::string, long long, std::vector<std::string>>;

struct FixtureTable {
    std::string name;
    bool array_item = false;  // declared with [[name]]
    int line = 0;
    std::vector<std::pair<std::string, FixtureValue>> entries;

    const FixtureValue* find(const std::string& key) const;
};

/// Line-oriented TOML subset: [table], [[array]], key = "string" | integer |
/// ["a", "b", ...] (arrays may span lines), '#' comments.
std::vector<FixtureTable> parse_fixture_tables(std::string_view text);

struct DerivationSpec {
    std::string name;
    int line = 0;
    std::vector<std::pair<std::string, std::string>> images;  // variable -> expression
    std::optional<std::string> extends;                       // base derivation name
    std::string extension_image = "1";
};

struct Expectation {
    std::string claim;
    int line = 0;
    std::map<std::string, FixtureValue> params;

    std::optional<std::string> text(const std::string& key) const;
    std::vector<std::string> list(const std::string& key) const;
    std::optional<long long> integer(const std::string& key) const;
};

struct Fixture {
    std::string id;
    std::string title;
    std::vector<std::string> variables;
    std::vector<std::string> relations;
    std::string order = "grevlex";
    std::optional<std::string> extension_variable;
    std::vector<DerivationSpec> base_derivations;
    std::vector<DerivationSpec> derivations;
    std::vector<Expectation> expectations;
    std::vector<std::pair<std::string, std::string>> annotations;
};

/// Throws FixtureError.
Fixture parse_fixture(std::string_view text, std::string id);
/// Throws FixtureError (including I/O failure).
Fixture load_fixture(const std::string& path);

/// A declared derivation after construction; ill-defined ones keep the rejection.
struct NamedDerivation {
    std::string name;
    std::optional<Derivation> derivation;
    std::string error;
    std::optional<Polynomial> residue;
};

/// Fixture with its ring and derivations built.
struct FixtureInstance {
    Fixture fixture;
    Ring base_ring;
    Ring ring;  // base_ring, or base_ring[extension_variable]
    std::vector<NamedDerivation> derivations;

    const NamedDerivation* find(const std::string& name) const;
    /// Throws FixtureError when undeclared or not well defined.
    const Derivation& derivation(const std::string& name) const;
};

/// Throws FixtureError, ParseError and ring construction errors.
FixtureInstance instantiate(Fixture fixture, std::optional<OrderKind> order_override = std::nullopt);

}  // namespace lnd
