#include "lnd/verify.hpp"

#include "lnd/dixmier.hpp"
#include "lnd/parser.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

namespace lnd {

std::string to_string(ClaimStatus status) {
    switch (status) {
        case ClaimStatus::pass: return "pass";
        case ClaimStatus::fail: return "fail";
        case ClaimStatus::inconclusive: return "inconclusive";
    }
    return "fail";
}

bool VerificationReport::passed() const {
    return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.status == ClaimStatus::pass; });
}

namespace {

std::string join(const std::vector<std::string>& items, const std::string& sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
    return out;
}

std::string render_set(const std::vector<RingElement>& elements) {
    std::vector<std::string> parts;
    for (const auto& e : elements) parts.push_back(e.to_string());
    return "{" + join(parts) + "}";
}

std::vector<RingElement> parse_all(const std::vector<std::string>& exprs, const Ring& ring) {
    std::vector<RingElement> out;
    for (const auto& e : exprs) out.push_back(parse_element(e, ring));
    return out;
}

std::string certificate_detail(const NilpotencyCertificate& cert) {
    std::vector<std::string> parts;
    for (const auto& [name, index] : cert.per_generator_index) {
        parts.push_back(name + ":" + (index ? std::to_string(*index) : "?"));
    }
    return "indices {" + join(parts) + "}";
}

class ClaimRunner {
public:
    ClaimRunner(const FixtureInstance& instance, const RunOptions& options)
        : fx_(instance), ring_(instance.ring), options_(options) {
        lab_ = options.lab;
        lab_.max_steps = options.max_steps;
    }

    ClaimResult run(const Expectation& e) {
        ClaimResult result;
        result.claim = e.claim;
        const auto start = std::chrono::steady_clock::now();
        try {
            dispatch(e, result);
        } catch (const std::exception& ex) {
            result.status = ClaimStatus::fail;
            result.detail = std::string("error: ") + ex.what();
        }
        result.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return result;
    }

private:
    unsigned degree_of(const Expectation& e, ClaimResult& result) const {
        auto d = e.integer("degree");
        if (d && *d < 0) throw FixtureError("negative degree", e.line);
        const unsigned degree = d ? static_cast<unsigned>(*d) : options_.degree;
        result.degree = degree;
        return degree;
    }

    std::string required(const Expectation& e, const std::string& key) const {
        auto v = e.text(key);
        if (!v) throw FixtureError("claim " + e.claim + " needs '" + key + "'", e.line);
        return *v;
    }

    const Derivation& derivation(const Expectation& e, ClaimResult& result) const {
        const std::string name = required(e, "derivation");
        result.subject = name;
        return fx_.derivation(name);
    }

    std::vector<const Derivation*> derivation_list(const Expectation& e, ClaimResult& result) const {
        const auto names = e.list("derivations");
        if (names.empty()) throw FixtureError("claim " + e.claim + " needs 'derivations'", e.line);
        result.subject = join(names);
        std::vector<const Derivation*> out;
        for (const auto& n : names) out.push_back(&fx_.derivation(n));
        return out;
    }

    void compare_spans(const SpanBasis& actual, const SpanBasis& expected, ClaimResult& result) const {
        if (same_span(actual, expected)) {
            result.status = ClaimStatus::pass;
            result.detail = "dimension " + std::to_string(actual.dimension()) + ": " + actual.describe();
            return;
        }
        result.status = ClaimStatus::fail;
        result.detail = "computed dimension " + std::to_string(actual.dimension()) + ", expected " +
                        std::to_string(expected.dimension());
        if (auto w = element_outside(actual, expected)) {
            result.witness = "in computed span only: " + w->to_string();
        } else if (auto w2 = element_outside(expected, actual)) {
            result.witness = "in expected span only: " + w2->to_string();
        }
    }

    void dispatch(const Expectation& e, ClaimResult& result) {
        const std::string& c = e.claim;
        if (c == "well-defined") return well_defined(e, result);
        if (c == "not-well-defined") return not_well_defined(e, result);
        if (c == "lnd-certified") return lnd_certified(e, result);
        if (c == "lnd-inconclusive") return lnd_inconclusive(e, result);
        if (c == "slice") return slice(e, result);
        if (c == "local-slice") return local_slice(e, result);
        if (c == "dixmier-image") return dixmier_image(e, result);
        if (c == "kernel-generators") return kernel_generators(e, result);
        if (c == "bounded-kernel-basis") return bounded_kernel_basis(e, result);
        if (c == "intersection-trivial-at-degree" || c == "intersection-equals") return intersection(e, result);
        if (c == "mlstar-trivial-at-degree") return mlstar(e, result);
        if (c == "distinct-kernels") return distinct(e, result);
        throw FixtureError("unknown claim '" + c + "'", e.line);
    }

    void well_defined(const Expectation& e, ClaimResult& result) {
        const std::string name = required(e, "derivation");
        result.subject = name;
        const NamedDerivation* d = fx_.find(name);
        if (!d) throw FixtureError("undeclared derivation '" + name + "'", e.line);
        if (d->derivation) {
            result.status = ClaimStatus::pass;
            result.detail = "Leibniz image of every relation reduces to 0";
        } else {
            result.status = ClaimStatus::fail;
            result.detail = d->error;
            if (d->residue) result.witness = "residue " + ring_->to_string(*d->residue);
        }
    }

    void not_well_defined(const Expectation& e, ClaimResult& result) {
        const std::string name = required(e, "derivation");
        result.subject = name;
        const NamedDerivation* d = fx_.find(name);
        if (!d) throw FixtureError("undeclared derivation '" + name + "'", e.line);
        if (d->derivation) {
            result.status = ClaimStatus::fail;
            result.detail = "derivation was accepted";
            return;
        }
        const std::string residue = ring_->to_string(*d->residue);
        result.detail = "rejected, residue " + residue;
        result.status = ClaimStatus::pass;
        if (auto expected = e.text("residue")) {
            const Polynomial want = ring_->reduce(parse_expression(*expected, ring_->context()));
            if (!(want == *d->residue)) {
                result.status = ClaimStatus::fail;
                result.witness = "residue " + residue + ", expected " + ring_->to_string(want);
            }
        }
    }

    void lnd_certified(const Expectation& e, ClaimResult& result) {
        const Derivation& d = derivation(e, result);
        const auto cert = certify_lnd(d, options_.max_steps);
        result.detail = certificate_detail(cert);
        if (!cert.certified) {
            result.status = ClaimStatus::inconclusive;
            result.detail += ", inconclusive at bound " + std::to_string(options_.max_steps);
            return;
        }
        result.status = ClaimStatus::pass;
        if (auto max_index = e.integer("max_index")) {
            for (const auto& [name, index] : cert.per_generator_index) {
                if (static_cast<long long>(*index) > *max_index) {
                    result.status = ClaimStatus::fail;
                    result.witness = name + " has index " + std::to_string(*index) + " > " + std::to_string(*max_index);
                    break;
                }
            }
        }
    }

    void lnd_inconclusive(const Expectation& e, ClaimResult& result) {
        const Derivation& d = derivation(e, result);
        const auto bound = e.integer("bound").value_or(options_.max_steps);
        if (bound < 1) throw FixtureError("bound must be positive", e.line);
        const auto cert = certify_lnd(d, static_cast<unsigned>(bound));
        result.detail = certificate_detail(cert) + " at bound " + std::to_string(bound);
        result.status = cert.certified ? ClaimStatus::fail : ClaimStatus::pass;
        if (cert.certified) result.witness = "certified within the bound";
    }

    void slice(const Expectation& e, ClaimResult& result) {
        const Derivation& d = derivation(e, result);
        const RingElement s = parse_element(required(e, "slice"), ring_);
        result.subject += " / " + s.to_string();
        const RingElement ds = d.apply(s);
        if (!(ds == ring_->one())) {
            result.status = ClaimStatus::fail;
            result.witness = "D(" + s.to_string() + ") = " + ds.to_string();
            return;
        }
        const auto report = find_slices(d);
        const bool found = std::find(report.slices.begin(), report.slices.end(), s) != report.slices.end();
        result.status = ClaimStatus::pass;
        result.detail = found ? "found by template scan (" + std::to_string(report.slices.size()) + " slices)"
                              : "D(s) = 1 verified; outside the template scan";
    }

    void local_slice(const Expectation& e, ClaimResult& result) {
        const Derivation& d = derivation(e, result);
        const RingElement r = parse_element(required(e, "element"), ring_);
        result.subject += " / " + r.to_string();
        const RingElement t = d.apply(r);
        const RingElement dt = d.apply(t);
        if (t.is_zero() || !dt.is_zero()) {
            result.status = ClaimStatus::fail;
            result.witness = "D(r) = " + t.to_string() + ", D^2(r) = " + dt.to_string();
            return;
        }
        result.status = ClaimStatus::pass;
        result.detail = "D(r) = " + t.to_string();
    }

    void dixmier_image(const Expectation& e, ClaimResult& result) {
        const Derivation& d = derivation(e, result);
        const RingElement r = parse_element(required(e, "r"), ring_);
        const RingElement f = parse_element(required(e, "f"), ring_);
        const RingElement want_num = parse_element(required(e, "numerator"), ring_);
        const auto exponent = e.integer("exponent").value_or(0);
        const LocalizedElement image = dixmier_apply(d, r, f, options_.max_steps);
        const LocalizedElement want(want_num, d.apply(r), static_cast<unsigned>(exponent));
        result.subject += " / pi_" + r.to_string() + "(" + f.to_string() + ")";
        result.detail = image.to_string();
        if (image == want) {
            result.status = ClaimStatus::pass;
        } else {
            result.status = ClaimStatus::fail;
            result.witness = "computed " + image.to_string() + ", expected " + want.to_string();
        }
    }

    void kernel_generators(const Expectation& e, ClaimResult& result) {
        const Derivation& d = derivation(e, result);
        const RingElement s = parse_element(required(e, "slice"), ring_);
        const auto kernel = kernel_via_slice(d, s, options_.max_steps);
        const auto expected = normalize_generators(parse_all(e.list("generators"), ring_));
        result.detail = render_set(kernel.generators);
        if (kernel.generators == expected) {
            result.status = ClaimStatus::pass;
            return;
        }
        result.status = ClaimStatus::fail;
        std::vector<RingElement> missing;
        std::vector<RingElement> extra;
        for (const auto& g : expected) {
            if (std::find(kernel.generators.begin(), kernel.generators.end(), g) == kernel.generators.end()) {
                missing.push_back(g);
            }
        }
        for (const auto& g : kernel.generators) {
            if (std::find(expected.begin(), expected.end(), g) == expected.end()) extra.push_back(g);
        }
        std::ostringstream w;
        w << "computed-only " << render_set(extra) << ", expected-only " << render_set(missing);
        for (const auto& g : missing) {
            const RingElement dg = d.apply(g);
            if (!dg.is_zero()) w << "; D(" << g.to_string() << ") = " << dg.to_string() << " != 0";
        }
        result.witness = w.str();
    }

    void bounded_kernel_basis(const Expectation& e, ClaimResult& result) {
        const Derivation& d = derivation(e, result);
        const unsigned degree = degree_of(e, result);
        const auto gens = parse_all(e.list("generators"), ring_);
        compare_spans(kernel_basis_bounded(d, degree, lab_), subalgebra_span_bounded(ring_, gens, degree, lab_),
                      result);
    }

    void intersection(const Expectation& e, ClaimResult& result) {
        const auto ds = derivation_list(e, result);
        const unsigned degree = degree_of(e, result);
        std::vector<SpanBasis> kernels;
        for (const auto* d : ds) kernels.push_back(kernel_basis_bounded(*d, degree, lab_));
        const auto gens = parse_all(e.list("generators"), ring_);
        compare_spans(intersect_spans(kernels), subalgebra_span_bounded(ring_, gens, degree, lab_), result);
    }

    void mlstar(const Expectation& e, ClaimResult& result) {
        const auto ds = derivation_list(e, result);
        const unsigned degree = degree_of(e, result);
        const auto slices = e.list("slices");
        if (slices.size() != ds.size()) throw FixtureError("'slices' must match 'derivations'", e.line);
        std::vector<SliceWitness> family;
        for (std::size_t i = 0; i < ds.size(); ++i) family.push_back({*ds[i], parse_element(slices[i], ring_)});
        compare_spans(ml_star_estimate_bounded(family, degree, lab_), constants_span(ring_, degree, lab_), result);
        if (result.status == ClaimStatus::pass) result.detail = "ML*-estimate trivial at d=" + std::to_string(degree);
    }

    void distinct(const Expectation& e, ClaimResult& result) {
        const auto ds = derivation_list(e, result);
        if (ds.size() != 2) throw FixtureError("distinct-kernels takes exactly two derivations", e.line);
        const unsigned degree = degree_of(e, result);
        const auto verdict = kernels_distinct_bounded(*ds[0], *ds[1], degree, lab_);
        if (!verdict.distinct) {
            result.status = ClaimStatus::fail;
            result.detail = "not refuted at degree " + std::to_string(degree);
            return;
        }
        const Derivation& in = *ds[verdict.witness_side - 1];
        const Derivation& out = *ds[2 - verdict.witness_side];
        result.status = ClaimStatus::pass;
        result.detail = "witness " + verdict.witness->to_string() + " in Ker " + in.label() + ", " + out.label() +
                        "(w) = " + out.apply(*verdict.witness).to_string();
        if (auto given = e.text("witness")) {
            const RingElement w = parse_element(*given, ring_);
            const bool ok = ds[0]->apply(w).is_zero() && !ds[1]->apply(w).is_zero();
            if (!ok) {
                result.status = ClaimStatus::fail;
                result.witness = "stated witness " + w.to_string() + " is not in Ker " + ds[0]->label() +
                                 " \\ Ker " + ds[1]->label();
            } else {
                result.detail += "; stated witness " + w.to_string() + " verified";
            }
        }
    }

    const FixtureInstance& fx_;
    Ring ring_;
    RunOptions options_;
    LabOptions lab_;
};

}  // namespace

VerificationReport verify_fixture(const FixtureInstance& instance, const RunOptions& options) {
    VerificationReport report;
    report.fixture = instance.fixture.id;
    report.title = instance.fixture.title;
    report.annotations = instance.fixture.annotations;
    report.max_steps = options.max_steps;
    const auto start = std::chrono::steady_clock::now();
    ClaimRunner runner(instance, options);
    for (const auto& e : instance.fixture.expectations) report.claims.push_back(runner.run(e));
    report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

VerificationReport run_fixture(const std::string& path, const RunOptions& options) {
    return verify_fixture(instantiate(load_fixture(path), options.order), options);
}

std::string VerificationReport::render_text() const {
    std::ostringstream os;
    os << "fixture " << fixture;
    if (!title.empty()) os << " -- " << title;
    os << "\n";
    for (const auto& c : claims) {
        std::string tag = to_string(c.status);
        std::transform(tag.begin(), tag.end(), tag.begin(), [](unsigned char ch) { return std::toupper(ch); });
        os << "  [" << tag << "] " << c.claim;
        if (!c.subject.empty()) os << " " << c.subject;
        if (c.degree) os << " (d=" << *c.degree << ")";
        os << "\n";
        if (!c.detail.empty()) os << "      " << c.detail << "\n";
        if (!c.witness.empty()) os << "      witness: " << c.witness << "\n";
    }
    for (const auto& [key, text] : annotations) os << "  note " << key << ": " << text << "\n";
    const auto passed_count =
        std::count_if(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.status == ClaimStatus::pass; });
    os << "  " << passed_count << "/" << claims.size() << " claims passed (" << std::fixed << std::setprecision(1)
       << millis << " ms)\n";
    return os.str();
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json out;
    out["fixture"] = fixture;
    out["status"] = passed() ? "pass" : "fail";
    out["millis"] = millis;
    out["max_steps"] = max_steps;
    out["claims"] = nlohmann::json::array();
    for (const auto& c : claims) {
        nlohmann::json j;
        j["claim"] = c.claim;
        j["subject"] = c.subject;
        j["status"] = to_string(c.status);
        j["detail"] = c.detail;
        j["witness"] = c.witness.empty() ? nlohmann::json(nullptr) : nlohmann::json(c.witness);
        j["degree"] = c.degree ? nlohmann::json(*c.degree) : nlohmann::json(nullptr);
        j["millis"] = c.millis;
        out["claims"].push_back(std::move(j));
    }
    nlohmann::json notes = nlohmann::json::object();
    for (const auto& [k, v] : annotations) notes[k] = v;
    out["annotations"] = std::move(notes);
    return out;
}

}  // namespace lnd
