#include "lnd/fixture.hpp"

#include "lnd/parser.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace lnd {

const FixtureValue* FixtureTable::find(const std::string& key) const {
    for (const auto& [k, v] : entries) {
        if (k == key) return &v;
    }
    return nullptr;
}

namespace {

std::string trim(std::string_view s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

// Drops a trailing '#' comment that is not inside a string.
std::string strip_comment(std::string_view line) {
    bool in_string = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (in_string && c == '\\') {
            ++i;
        } else if (c == '"') {
            in_string = !in_string;
        } else if (c == '#' && !in_string) {
            return std::string(line.substr(0, i));
        }
    }
    return std::string(line);
}

int bracket_balance(std::string_view s) {
    int depth = 0;
    bool in_string = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (in_string && c == '\\') {
            ++i;
        } else if (c == '"') {
            in_string = !in_string;
        } else if (!in_string && c == '[') {
            ++depth;
        } else if (!in_string && c == ']') {
            --depth;
        }
    }
    return depth;
}

class ValueReader {
public:
    ValueReader(std::string_view text, int line) : text_(text), line_(line) {}

    FixtureValue read() {
        skip();
        FixtureValue v = value();
        skip();
        if (pos_ != text_.size()) fail("trailing characters after value");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw FixtureError(what, line_); }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    FixtureValue value() {
        if (pos_ >= text_.size()) fail("missing value");
        const char c = text_[pos_];
        if (c == '"') return string();
        if (c == '[') {
            ++pos_;
            std::vector<std::string> items;
            skip();
            while (pos_ < text_.size() && text_[pos_] != ']') {
                if (text_[pos_] != '"') fail("arrays may only hold strings");
                items.push_back(string());
                skip();
                if (pos_ < text_.size() && text_[pos_] == ',') {
                    ++pos_;
                    skip();
                }
            }
            if (pos_ >= text_.size()) fail("unterminated array");
            ++pos_;
            return items;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_++;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            try {
                return std::stoll(std::string(text_.substr(start, pos_ - start)));
            } catch (const std::exception&) {
                fail("bad integer");
            }
        }
        fail("unsupported value");
    }

    std::string string() {
        ++pos_;  // opening quote
        std::string out;
        while (pos_ < text_.size() && text_[pos_] != '"') {
            char c = text_[pos_++];
            if (c == '\\') {
                if (pos_ >= text_.size()) break;
                const char e = text_[pos_++];
                c = e == 'n' ? '\n' : e == 't' ? '\t' : e;
            }
            out += c;
        }
        if (pos_ >= text_.size()) fail("unterminated string");
        ++pos_;
        return out;
    }

    std::string_view text_;
    int line_;
    std::size_t pos_ = 0;
};

bool valid_key(const std::string& key) {
    if (key.empty()) return false;
    for (char c : key) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-' && c != '.') return false;
    }
    return true;
}

std::string as_string(const FixtureValue& v, const std::string& key, int line) {
    if (auto s = std::get_if<std::string>(&v)) return *s;
    throw FixtureError("'" + key + "' must be a string", line);
}

std::vector<std::string> as_list(const FixtureValue& v, const std::string& key, int line) {
    if (auto l = std::get_if<std::vector<std::string>>(&v)) return *l;
    throw FixtureError("'" + key + "' must be an array of strings", line);
}

DerivationSpec derivation_spec(const FixtureTable& table, const std::string& name) {
    DerivationSpec spec{name, table.line, {}, std::nullopt, "1"};
    for (const auto& [key, value] : table.entries) {
        if (key == "extends") {
            spec.extends = as_string(value, key, table.line);
        } else if (key == "image") {
            spec.extension_image = as_string(value, key, table.line);
        } else {
            spec.images.emplace_back(key, as_string(value, key, table.line));
        }
    }
    if (spec.extends && !spec.images.empty()) {
        throw FixtureError("derivation " + name + " mixes 'extends' with explicit images", table.line);
    }
    return spec;
}

}  // namespace

std::vector<FixtureTable> parse_fixture_tables(std::string_view text) {
    std::vector<FixtureTable> tables{FixtureTable{"", false, 0, {}}};
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        if (line.starts_with("[[")) {
            if (!line.ends_with("]]")) throw FixtureError("malformed array-table header", line_no);
            tables.push_back({trim(line.substr(2, line.size() - 4)), true, line_no, {}});
            continue;
        }
        if (line.starts_with("[")) {
            if (!line.ends_with("]")) throw FixtureError("malformed table header", line_no);
            tables.push_back({trim(line.substr(1, line.size() - 2)), false, line_no, {}});
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw FixtureError("expected 'key = value'", line_no);
        std::string key = trim(line.substr(0, eq));
        if (key.size() >= 2 && key.front() == '"' && key.back() == '"') key = key.substr(1, key.size() - 2);
        if (!valid_key(key)) throw FixtureError("invalid key '" + key + "'", line_no);
        std::string value_text = trim(line.substr(eq + 1));
        const int start_line = line_no;
        while (bracket_balance(value_text) > 0 && std::getline(in, raw)) {
            ++line_no;
            value_text += " " + trim(strip_comment(raw));
        }
        if (tables.back().find(key)) throw FixtureError("duplicate key '" + key + "'", start_line);
        tables.back().entries.emplace_back(key, ValueReader(value_text, start_line).read());
    }
    return tables;
}

std::optional<std::string> Expectation::text(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) return std::nullopt;
    return as_string(it->second, key, line);
}

std::vector<std::string> Expectation::list(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) return {};
    return as_list(it->second, key, line);
}

std::optional<long long> Expectation::integer(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) return std::nullopt;
    if (auto i = std::get_if<long long>(&it->second)) return *i;
    throw FixtureError("'" + key + "' must be an integer", line);
}

Fixture parse_fixture(std::string_view text, std::string id) {
    Fixture fx;
    fx.id = std::move(id);
    bool have_ring = false;
    for (const auto& table : parse_fixture_tables(text)) {
        if (table.name.empty()) {
            if (auto v = table.find("title")) fx.title = as_string(*v, "title", table.line);
            if (auto v = table.find("id")) fx.id = as_string(*v, "id", table.line);
        } else if (table.name == "ring") {
            have_ring = true;
            const FixtureValue* vars = table.find("variables");
            if (!vars) throw FixtureError("[ring] needs 'variables'", table.line);
            fx.variables = as_list(*vars, "variables", table.line);
            if (auto v = table.find("relations")) fx.relations = as_list(*v, "relations", table.line);
            if (auto v = table.find("order")) fx.order = as_string(*v, "order", table.line);
            if (auto v = table.find("extend")) fx.extension_variable = as_string(*v, "extend", table.line);
        } else if (table.name.starts_with("base_derivation.")) {
            fx.base_derivations.push_back(derivation_spec(table, table.name.substr(16)));
        } else if (table.name.starts_with("derivation.")) {
            fx.derivations.push_back(derivation_spec(table, table.name.substr(11)));
        } else if (table.name == "expect" && table.array_item) {
            Expectation e;
            e.line = table.line;
            for (const auto& [k, v] : table.entries) e.params.emplace(k, v);
            auto claim = e.text("claim");
            if (!claim) throw FixtureError("expectation without 'claim'", table.line);
            e.claim = *claim;
            fx.expectations.push_back(std::move(e));
        } else if (table.name == "annotations") {
            for (const auto& [k, v] : table.entries) fx.annotations.emplace_back(k, as_string(v, k, table.line));
        } else {
            throw FixtureError("unknown table [" + table.name + "]", table.line);
        }
    }
    if (!have_ring) throw FixtureError("missing [ring] table", 0);
    return fx;
}

Fixture load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FixtureError("cannot read fixture '" + path + "'", 0);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_fixture(buffer.str(), std::filesystem::path(path).stem().string());
}

const NamedDerivation* FixtureInstance::find(const std::string& name) const {
    for (const auto& d : derivations) {
        if (d.name == name) return &d;
    }
    return nullptr;
}

const Derivation& FixtureInstance::derivation(const std::string& name) const {
    const NamedDerivation* d = find(name);
    if (!d) throw FixtureError("undeclared derivation '" + name + "'", 0);
    if (!d->derivation) throw FixtureError(d->error, 0);
    return *d->derivation;
}

namespace {

NamedDerivation build_direct(const DerivationSpec& spec, const Ring& ring) {
    std::vector<std::optional<RingElement>> images(ring->variable_count());
    for (const auto& [var, expr] : spec.images) {
        auto v = ring->context()->index_of(var);
        if (!v) throw FixtureError("derivation " + spec.name + " sets unknown variable '" + var + "'", spec.line);
        images[*v] = parse_element(expr, ring);
    }
    std::vector<RingElement> full;
    for (VarIndex v = 0; v < images.size(); ++v) {
        if (!images[v]) {
            throw FixtureError("derivation " + spec.name + " has no image for '" + ring->variables()[v] + "'",
                               spec.line);
        }
        full.push_back(*images[v]);
    }
    try {
        return {spec.name, Derivation(ring, std::move(full), spec.name), {}, std::nullopt};
    } catch (const NotWellDefined& e) {
        return {spec.name, std::nullopt, e.what(), e.residue()};
    }
}

}  // namespace

FixtureInstance instantiate(Fixture fixture, std::optional<OrderKind> order_override) {
    const OrderKind kind = order_override ? *order_override : parse_order_kind(fixture.order);
    ContextPtr context = VariableContext::make(fixture.variables);
    std::vector<Polynomial> relations;
    for (const auto& r : fixture.relations) relations.push_back(parse_expression(r, context));
    Ring base = make_ring(context, std::move(relations), kind);
    Ring ring = base;
    if (fixture.extension_variable) {
        if (context->index_of(*fixture.extension_variable)) throw DuplicateVariable(*fixture.extension_variable);
        ring = adjoin_variable(base, *fixture.extension_variable);
    }

    std::vector<NamedDerivation> base_derivations;
    for (const auto& spec : fixture.base_derivations) base_derivations.push_back(build_direct(spec, base));

    std::vector<NamedDerivation> derivations;
    for (const auto& spec : fixture.derivations) {
        if (!spec.extends) {
            derivations.push_back(build_direct(spec, ring));
            continue;
        }
        if (!fixture.extension_variable) {
            throw FixtureError("derivation " + spec.name + " extends without [ring] extend", spec.line);
        }
        const NamedDerivation* parent = nullptr;
        for (const auto& b : base_derivations) {
            if (b.name == *spec.extends) parent = &b;
        }
        if (!parent) throw FixtureError("unknown base derivation '" + *spec.extends + "'", spec.line);
        if (!parent->derivation) {
            derivations.push_back({spec.name, std::nullopt, parent->error, parent->residue});
            continue;
        }
        Polynomial image = parse_expression(spec.extension_image, ring->context());
        auto extended = extend_with_new_variable(*parent->derivation, *fixture.extension_variable, image, spec.name);
        derivations.push_back({spec.name, std::move(extended.second), {}, std::nullopt});
    }
    if (!fixture.extension_variable) {
        for (auto& b : base_derivations) derivations.push_back(std::move(b));
    }
    return {std::move(fixture), base, ring, std::move(derivations)};
}

}  // namespace lnd
