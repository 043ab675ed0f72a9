// Command-line front end: every check is run as a one-check case through the
// same path as corpus files, so single commands and corpora report alike.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fsplit/report.hpp"

namespace {

using fsplit::cli::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Globals {
    std::uint64_t prime = 2;
    std::string vars = "x,y";
    std::string method = "both";
    std::string format = "text";
};

std::vector<std::string> split_names(const std::string& list) {
    std::vector<std::string> out;
    std::stringstream in(list);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

json base_case(const Globals& g, const std::string& name) {
    return {{"name", name}, {"prime", g.prime}, {"variables", split_names(g.vars)}, {"method", g.method}};
}

int emit(const Globals& g, const fsplit::cli::CaseReport& report) {
    if (g.format == "json") {
        std::cout << fsplit::cli::to_json(report).dump(2) << '\n';
    } else {
        std::cout << fsplit::cli::to_text(report, true);
    }
    return report.all_pass() ? kExitOk : kExitMismatch;
}

int run_single(const Globals& g, json c) { return emit(g, fsplit::cli::run_case(c)); }

int run_corpus_file(const Globals& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw fsplit::cli::UsageError("cannot open corpus file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw fsplit::cli::UsageError(std::string("invalid JSON in corpus: ") + e.what());
    }
    fsplit::cli::CorpusReport report = fsplit::cli::run_corpus(doc);
    if (g.format == "json") {
        std::cout << fsplit::cli::to_json(report).dump(2) << '\n';
    } else {
        std::cout << fsplit::cli::to_text(report);
    }
    return report.all_pass() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frobenius splitting checks for polynomial rings over F_p"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("-p,--prime", g.prime, "The prime p")->capture_default_str();
    app.add_option("--vars", g.vars, "Comma-separated variable names")->capture_default_str();
    app.add_option("--method", g.method, "Compatibility method")
        ->check(CLI::IsMember({"fedder", "finite", "both"}))
        ->capture_default_str();
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    std::string sigma;
    std::string divisor;
    std::string order;
    std::vector<std::string> ideal;
    std::vector<std::uint64_t> generators;
    unsigned matrix_n = 3;
    std::string corpus_path;

    auto* split = app.add_subcommand("split-check", "Decide whether sigma*sigma0 is a splitting");
    split->add_option("sigma", sigma, "Coefficient expression")->required();

    auto* compat = app.add_subcommand("compat", "Is sigma*sigma0 compatible with an ideal");
    compat->add_option("sigma", sigma, "Coefficient expression")->required();
    compat->add_option("-i,--ideal", ideal, "Ideal generator (repeatable)")->required();

    auto* fedder = app.add_subcommand("fedder", "Compute (I^[p] : I)");
    fedder->add_option("-i,--ideal", ideal, "Ideal generator (repeatable)")->required();

    auto* exists = app.add_subcommand("exists-split", "Does some splitting compatible with the ideal exist");
    exists->add_option("-i,--ideal", ideal, "Ideal generator (repeatable)")->required();

    auto* dsplit = app.add_subcommand("d-split", "Is the splitting a D-splitting for D = div(h)");
    dsplit->add_option("sigma", sigma, "Coefficient expression")->required();
    dsplit->add_option("divisor", divisor, "Equation h of D")->required();

    auto* certify = app.add_subcommand("certify", "Certify a residue chain along a variable order");
    certify->add_option("sigma", sigma, "Coefficient expression")->required();
    certify->add_option("--order", order, "Comma-separated variable order")->required();

    auto* search = app.add_subcommand("search-chain", "Search for a residue chain");
    search->add_option("sigma", sigma, "Coefficient expression")->required();

    auto* matrix = app.add_subcommand("matrix-demo", "Residue chain for the n x n matrix section");
    matrix->add_option("-n,--size", matrix_n, "Matrix size")->capture_default_str();
    matrix->add_option("--order", order, "Comma-separated variable order (default: search)");

    auto* semigroup = app.add_subcommand("semigroup", "Split check for a numerical semigroup ring");
    semigroup->add_option("generators", generators, "Semigroup generators")->required();

    auto* p1 = app.add_subcommand("p1", "Does the splitting of A^1 extend to P^1");
    p1->add_option("sigma", sigma, "Coefficient expression")->required();

    auto* corpus = app.add_subcommand("corpus", "Corpus files");
    corpus->require_subcommand(1);
    auto* corpus_run = corpus->add_subcommand("run", "Run every case of a corpus file");
    corpus_run->add_option("file", corpus_path, "Corpus JSON file")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        auto with_ideal = [&](json c, const char* kind) {
            c["checks"] = json::array({{{"kind", kind}, {"ideal", ideal}}});
            return c;
        };
        if (*split) {
            json c = base_case(g, "split-check");
            c["sigma"] = sigma;
            c["checks"] = json::array({{{"kind", "splitting"}}});
            return run_single(g, c);
        }
        if (*compat) {
            json c = with_ideal(base_case(g, "compat"), "compatible");
            c["sigma"] = sigma;
            return run_single(g, c);
        }
        if (*fedder) return run_single(g, with_ideal(base_case(g, "fedder"), "fedder"));
        if (*exists) return run_single(g, with_ideal(base_case(g, "exists-split"), "exists-split"));
        if (*dsplit) {
            json c = base_case(g, "d-split");
            c["sigma"] = sigma;
            c["checks"] = json::array({{{"kind", "d-split"}, {"divisor", divisor}}});
            return run_single(g, c);
        }
        if (*certify) {
            json c = base_case(g, "certify");
            c["sigma"] = sigma;
            c["checks"] = json::array({{{"kind", "chain"}, {"order", split_names(order)}}});
            return run_single(g, c);
        }
        if (*search) {
            json c = base_case(g, "search-chain");
            c["sigma"] = sigma;
            c["checks"] = json::array({{{"kind", "search-chain"}}});
            return run_single(g, c);
        }
        if (*matrix) {
            json c = {{"name", "matrix-demo"}, {"prime", g.prime}, {"matrix", matrix_n}};
            json checks = json::array({{{"kind", "homogeneous"}}, {{"kind", "origin"}}});
            if (order.empty()) {
                checks.push_back({{"kind", "search-chain"}});
            } else {
                checks.push_back({{"kind", "chain"}, {"order", split_names(order)}});
            }
            c["checks"] = checks;
            return run_single(g, c);
        }
        if (*semigroup) {
            json c = {{"name", "semigroup"}, {"prime", g.prime}};
            c["checks"] = json::array({{{"kind", "semigroup"}, {"generators", generators}}});
            return run_single(g, c);
        }
        if (*p1) {
            json c = base_case(g, "p1");
            c["sigma"] = sigma;
            c["checks"] = json::array({{{"kind", "p1"}}});
            return run_single(g, c);
        }
        if (*corpus_run) return run_corpus_file(g, corpus_path);
    } catch (const fsplit::Error& e) {
        std::cerr << "error: " << e.kind() << ": " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
