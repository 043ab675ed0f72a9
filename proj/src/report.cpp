#include "fsplit/report.hpp"

#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "fsplit/forms.hpp"
#include "fsplit/ideal.hpp"
#include "fsplit/parser.hpp"
#include "fsplit/residue.hpp"
#include "fsplit/splitting.hpp"

namespace fsplit::cli {

namespace {

struct CaseContext {
    RingPtr ring;
    std::optional<Polynomial> sigma;
    std::string method = "both";
};

const json& require(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) throw UsageError(std::string("missing field '") + key + "'");
    return obj.at(key);
}

std::string require_string(const json& obj, const char* key) {
    const json& v = require(obj, key);
    if (!v.is_string()) throw UsageError(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

const Polynomial& require_sigma(const CaseContext& ctx) {
    if (!ctx.sigma) throw UsageError("check needs a case-level 'sigma' expression");
    return *ctx.sigma;
}

Polynomial parse(const CaseContext& ctx, const json& expr) {
    if (!expr.is_string()) throw UsageError("expressions must be strings");
    return parse_polynomial(expr.get<std::string>(), ctx.ring);
}

IdealPresentation parse_ideal(const CaseContext& ctx, const json& check) {
    const json& gens = require(check, "ideal");
    if (!gens.is_array()) throw UsageError("'ideal' must be a list of expressions");
    std::vector<Polynomial> polys;
    for (const auto& g : gens) polys.push_back(parse(ctx, g));
    return IdealPresentation(ctx.ring, std::move(polys));
}

std::size_t variable_index(const CaseContext& ctx, const json& name) {
    if (!name.is_string()) throw UsageError("variable names must be strings");
    auto idx = ctx.ring->index_of(name.get<std::string>());
    if (!idx) throw UsageError("unknown variable '" + name.get<std::string>() + "'");
    return *idx;
}

json strings(const std::vector<Polynomial>& polys) {
    json out = json::array();
    for (const auto& f : polys) out.push_back(f.to_string());
    return out;
}

json chain_json(const ResidueChain& chain) {
    const RingContext& ring = *chain.initial.ring();
    json steps = json::array();
    for (const auto& s : chain.steps) {
        steps.push_back({{"variable", ring.variables()[s.variable]}, {"result", render_truncated(s.result)}});
    }
    return {{"initial", render_truncated(chain.initial)}, {"steps", steps}, {"terminal", chain.terminal.residue()}};
}

CompatMethod method_from(const std::string& name) {
    if (name == "fedder") return CompatMethod::Fedder;
    if (name == "finite") return CompatMethod::Finite;
    if (name == "both") return CompatMethod::Both;
    throw UsageError("unknown method '" + name + "' (fedder|finite|both)");
}

struct Outcome {
    json verdict;
    json certificate;
};

using Handler = std::function<Outcome(const CaseContext&, const json&)>;

Outcome check_splitting_kind(const CaseContext& ctx, const json&) {
    SplitVerdict v = check_splitting(TwistedEndo(require_sigma(ctx)));
    json cert = {{"sigma_of_one", v.witness ? v.witness->to_string() : std::to_string(v.constant->residue())}};
    return {v.name(), cert};
}

Outcome check_spans(const CaseContext& ctx, const json&) {
    SplitVerdict v = check_splitting(TwistedEndo(require_sigma(ctx)));
    json cert = nullptr;
    if (v.constant) cert = {{"constant", v.constant->residue()}, {"scale", v.constant->inverse().residue()}};
    return {v.kind != VerdictKind::NotSplitting, cert};
}

Outcome check_homogeneous(const CaseContext& ctx, const json&) {
    const Polynomial& f = require_sigma(ctx);
    SplitVerdict v = homogeneous_fastpath(TwistedEndo(f));
    auto h = is_homogeneous(f);
    return {v.name(), {{"degree", h->degree}, {"origin_coefficient", origin_coefficient(f).residue()}}};
}

Outcome check_origin(const CaseContext& ctx, const json&) {
    return {origin_coefficient(require_sigma(ctx)).residue(), nullptr};
}

Outcome check_compatible(const CaseContext& ctx, const json& check) {
    IdealPresentation ideal = parse_ideal(ctx, check);
    std::string method = check.value("method", ctx.method);
    bool ok = is_compatible(TwistedEndo(require_sigma(ctx)), ideal, method_from(method));
    return {ok, {{"method", method}}};
}

Outcome check_fedder(const CaseContext& ctx, const json& check) {
    IdealPresentation module = fedder_module(parse_ideal(ctx, check));
    return {strings(module.generators()), nullptr};
}

Outcome check_exists(const CaseContext& ctx, const json& check) {
    ExistenceResult r = exists_compatible_splitting(parse_ideal(ctx, check));
    return {r.exists, {{"obstruction", strings(r.obstruction.basis())}}};
}

Outcome check_dsplit(const CaseContext& ctx, const json& check) {
    Polynomial h = parse(ctx, require(check, "divisor"));
    return {d_splitting_check(TwistedEndo(require_sigma(ctx)), h), nullptr};
}

Outcome check_chain(const CaseContext& ctx, const json& check) {
    const json& order_json = require(check, "order");
    if (!order_json.is_array()) throw UsageError("'order' must be a list of variable names");
    std::vector<std::size_t> order;
    for (const auto& v : order_json) order.push_back(variable_index(ctx, v));
    ResidueChain chain = certify_chain(require_sigma(ctx), order);
    return {{{"certified", true}, {"terminal", chain.terminal.residue()}}, chain_json(chain)};
}

Outcome check_search(const CaseContext& ctx, const json&) {
    auto chain = search_chain(require_sigma(ctx));
    if (!chain) return {{{"found", false}}, nullptr};
    json order = json::array();
    for (auto v : chain->order()) order.push_back(ctx.ring->variables()[v]);
    return {{{"found", true}, {"order", order}, {"terminal", chain->terminal.residue()}}, chain_json(*chain)};
}

Outcome check_semigroup(const CaseContext& ctx, const json& check) {
    const json& gens = require(check, "generators");
    if (!gens.is_array()) throw UsageError("'generators' must be a list of positive integers");
    std::vector<std::uint64_t> values;
    for (const auto& g : gens) {
        if (!g.is_number_unsigned()) throw UsageError("'generators' must be a list of positive integers");
        values.push_back(g.get<std::uint64_t>());
    }
    NumericalSemigroup s(values);
    SemigroupVerdict v = semigroup_split_check(s, ctx.ring->prime());
    json verdict = {{"split", v.split}, {"witness", v.witness ? json(*v.witness) : json(nullptr)}};
    return {verdict, {{"gaps", s.gaps()}, {"conductor", s.conductor()}}};
}

Outcome check_nilpotent(const CaseContext& ctx, const json& check) {
    Polynomial g = parse(ctx, require(check, "element"));
    unsigned bound = check.value("bound", 4u);
    auto k = nilpotent_witness(g, parse_ideal(ctx, check), bound);
    return {k ? json(*k) : json(nullptr), nullptr};
}

Outcome check_p1(const CaseContext& ctx, const json&) {
    P1Extension e = p1_extension_check(TwistedEndo(require_sigma(ctx)));
    json verdict = {{"extends", e.extends},
                    {"compatible_zero", e.compatible_zero},
                    {"compatible_infinity", e.compatible_infinity}};
    json cert = {{"other_chart", e.other_chart ? json(e.other_chart->to_string()) : json(nullptr)}};
    return {verdict, cert};
}

Outcome check_render(const CaseContext& ctx, const json& check) {
    Polynomial f = check.contains("expr") ? parse(ctx, check.at("expr")) : require_sigma(ctx);
    return {f.to_string(), nullptr};
}

Outcome check_cartier(const CaseContext& ctx, const json&) {
    const Polynomial& f = require_sigma(ctx);
    Polynomial c = cartier_top(f);
    return {c.to_string(), {{"sigma0", sigma0(f).to_string()}}};
}

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table = {
        {"splitting", check_splitting_kind},
        {"spans", check_spans},
        {"homogeneous", check_homogeneous},
        {"origin", check_origin},
        {"compatible", check_compatible},
        {"fedder", check_fedder},
        {"exists-split", check_exists},
        {"d-split", check_dsplit},
        {"chain", check_chain},
        {"search-chain", check_search},
        {"semigroup", check_semigroup},
        {"nilpotent", check_nilpotent},
        {"p1", check_p1},
        {"render", check_render},
        {"cartier", check_cartier},
    };
    return table;
}

CaseContext build_context(const json& c) {
    if (!c.is_object()) throw UsageError("a case must be a JSON object");
    const json& prime_json = require(c, "prime");
    if (!prime_json.is_number_unsigned()) throw UsageError("'prime' must be a positive integer");
    std::uint64_t p = prime_json.get<std::uint64_t>();

    CaseContext ctx;
    std::vector<std::string> vars;
    if (c.contains("matrix")) {
        if (!c.at("matrix").is_number_unsigned()) throw UsageError("'matrix' must be a positive integer");
        unsigned n = c.at("matrix").get<unsigned>();
        ctx.ring = matrix_ring(n, p);
        if (!c.contains("sigma")) ctx.sigma = matrix_section(n, ctx.ring);
    } else {
        if (c.contains("variables")) {
            if (!c.at("variables").is_array()) throw UsageError("'variables' must be a list of names");
            for (const auto& v : c.at("variables")) {
                if (!v.is_string()) throw UsageError("variable names must be strings");
                vars.push_back(v.get<std::string>());
            }
        }
        for (const auto& v : vars) {
            if (v == "p") throw UsageError("'p' is reserved for the prime and cannot name a variable");
        }
        ctx.ring = make_ring(p, std::move(vars));
    }
    if (c.contains("sigma")) ctx.sigma = parse(ctx, c.at("sigma"));
    ctx.method = c.value("method", std::string("both"));
    return ctx;
}

}  // namespace

bool CaseReport::all_pass() const {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

bool CorpusReport::all_pass() const {
    for (const auto& c : cases) {
        if (!c.all_pass()) return false;
    }
    return true;
}

bool matches(const json& expected, const json& actual) {
    if (expected.is_object() && actual.is_object()) {
        for (const auto& [key, value] : expected.items()) {
            if (!actual.contains(key) || !matches(value, actual.at(key))) return false;
        }
        return true;
    }
    return expected == actual;
}

std::string render_truncated(const Polynomial& f, std::size_t max_terms) {
    if (f.size() <= max_terms) return f.to_string();
    std::vector<Term> head(f.terms().begin(), f.terms().begin() + static_cast<std::ptrdiff_t>(max_terms));
    return Polynomial::from_terms(f.ring(), std::move(head)).to_string() + " + ... (" +
           std::to_string(f.size() - max_terms) + " more terms)";
}

CaseReport run_case(const json& case_json) {
    CaseReport report;
    try {
        CaseContext ctx = build_context(case_json);
        report.name = case_json.value("name", std::string("unnamed"));
        report.prime = ctx.ring->p();

        const json& checks = require(case_json, "checks");
        if (!checks.is_array()) throw UsageError("'checks' must be a list");
        for (const auto& check : checks) {
            CheckResult r;
            r.kind = require_string(check, "kind");
            auto it = handlers().find(r.kind);
            if (it == handlers().end()) throw UsageError("unknown check kind '" + r.kind + "'");
            r.expected = check.contains("expect") ? check.at("expect") : json(nullptr);
            bool errored = false;
            try {
                Outcome o = it->second(ctx, check);
                r.verdict = std::move(o.verdict);
                r.certificate = std::move(o.certificate);
            } catch (const ParseError&) {
                throw;
            } catch (const UsageError&) {
                throw;
            } catch (const Error& e) {
                errored = true;
                r.verdict = std::string("error:") + e.kind();
                r.certificate = {{"message", e.what()}};
            }
            r.pass = r.expected.is_null() ? !errored : matches(r.expected, r.verdict);
            report.checks.push_back(std::move(r));
        }
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed case: ") + e.what());
    }
    return report;
}

CorpusReport run_corpus(const json& document) {
    if (!document.is_object()) throw UsageError("corpus must be a JSON object");
    if (document.value("schema", 0) != kSchemaVersion) {
        throw UsageError("unsupported corpus schema (expected " + std::to_string(kSchemaVersion) + ")");
    }
    const json& cases = require(document, "cases");
    if (!cases.is_array()) throw UsageError("'cases' must be a list");
    CorpusReport out;
    for (const auto& c : cases) out.cases.push_back(run_case(c));
    return out;
}

json to_json(const CaseReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        json entry = {{"kind", c.kind}, {"verdict", c.verdict}, {"expected", c.expected}, {"pass", c.pass}};
        if (!c.certificate.is_null()) entry["certificate"] = c.certificate;
        checks.push_back(std::move(entry));
    }
    return {{"schema", kSchemaVersion}, {"case", report.name}, {"prime", report.prime}, {"checks", checks}};
}

json to_json(const CorpusReport& report) {
    json cases = json::array();
    for (const auto& c : report.cases) cases.push_back(to_json(c));
    return {{"schema", kSchemaVersion}, {"reports", cases}, {"pass", report.all_pass()}};
}

std::string to_text(const CaseReport& report, bool with_certificates) {
    std::ostringstream out;
    for (const auto& c : report.checks) {
        out << (c.pass ? "PASS " : "FAIL ") << report.name << " p=" << report.prime << " " << c.kind
            << ": verdict=" << c.verdict.dump();
        if (!c.expected.is_null()) out << " expected=" << c.expected.dump();
        out << '\n';
        if (with_certificates && !c.certificate.is_null()) out << "  certificate: " << c.certificate.dump() << '\n';
    }
    return out.str();
}

std::string to_text(const CorpusReport& report, bool with_certificates) {
    std::string out;
    for (const auto& c : report.cases) out += to_text(c, with_certificates);
    return out;
}

}  // namespace fsplit::cli
