// hyperthin command-line tool. Talks to the library only through the C API.
#include <hyperthin/hyperthin.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

struct PairArgs {
    std::string alpha, beta, name;
    int j = 0, k = 0, n = 0;
    int example = 0;
};

struct Freer {
    void operator()(char* s) const { ht_string_free(s); }
    void operator()(ht_pair* p) const { ht_pair_free(p); }
    void operator()(ht_system* s) const { ht_system_free(s); }
};
using Text = std::unique_ptr<char, Freer>;

std::string json_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            out += buf;
            continue;
        }
        out += c;
    }
    return out;
}

int report_error(int status)
{
    Text j(ht_last_error_json());
    if (j)
        std::cout << j.get();
    else
        std::cout << "{\"error\": {\"kind\": \"internal\", \"message\": \"" << json_escape(ht_last_error()) << "\"}}\n";
    return status;
}

int usage_error(const std::string& msg)
{
    std::cout << "{\n  \"error\": {\n    \"kind\": \"validation\",\n    \"message\": \"" << json_escape(msg)
              << "\"\n  }\n}\n";
    return HT_ERR_VALIDATION;
}

void add_pair_options(CLI::App* cmd, PairArgs& a, bool with_example)
{
    cmd->add_option("--alpha", a.alpha, "comma separated exponents, e.g. 1/3,1/2,2/3");
    cmd->add_option("--beta", a.beta, "comma separated exponents");
    cmd->add_option("--name", a.name, "family M1 M2 M3 N1 N2 N3 N4");
    cmd->add_option("--j", a.j, "family parameter j");
    cmd->add_option("--k", a.k, "family parameter k (N families)");
    cmd->add_option("--n", a.n, "dimension");
    if (with_example) cmd->add_option("--example", a.example, "appendix example 1..6");
}

int make_pair(const PairArgs& a, ht_pair** out)
{
    int sources = (!a.alpha.empty() || !a.beta.empty()) + !a.name.empty() + (a.example != 0);
    if (sources != 1) return -1;
    if (!a.name.empty()) return ht_pair_family(a.name.c_str(), a.j, a.k, a.n, out);
    if (a.example) return ht_pair_appendix(a.example, out);
    return ht_pair_parse(a.alpha.c_str(), a.beta.c_str(), out);
}

int emit(const char* json, const std::string& output, const char* file_text = nullptr)
{
    std::cout << json;
    if (!output.empty()) {
        std::ofstream f(output, std::ios::binary);
        f << (file_text ? file_text : json);
        if (!f) return usage_error("cannot write " + output);
    }
    return HT_OK;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hypergeometric monodromy groups: lattices, thinness certificates and growth probes"};
    app.require_subcommand(1);
    std::string output;
    app.add_option("--output", output, "also write the result (CSV for growth) to this path");

    PairArgs pa;
    auto* classify = app.add_subcommand("classify", "classify an exponent pair");
    add_pair_options(classify, pa, true);
    auto* family = app.add_subcommand("family", "construct a family member and classify it");
    add_pair_options(family, pa, false);
    auto* build = app.add_subcommand("build", "Levelt generators A, B, C, Cartan vector v and rotation order");
    add_pair_options(build, pa, true);
    auto* gram = app.add_subcommand("gram", "invariant form, Gram matrix, parity, invariant factors, gate");
    add_pair_options(gram, pa, true);
    auto* certify = app.add_subcommand("certify", "thinness certificate via the minimal distance graph");
    add_pair_options(certify, pa, true);
    int max_depth = 5;
    std::uint64_t budget = 1'000'000;
    certify->add_option("--max-depth", max_depth, "maximum path length")->capture_default_str();
    certify->add_option("--budget", budget, "expanded node budget")->capture_default_str();
    auto* growth = app.add_subcommand("growth", "ball growth probe N(T) with slope fit");
    add_pair_options(growth, pa, true);
    double tmin = 100, tmax = 10000, margin = 4;
    unsigned points = 10, word_limit = 0;
    growth->add_option("--tmin", tmin)->capture_default_str();
    growth->add_option("--tmax", tmax)->capture_default_str();
    growth->add_option("--points", points)->capture_default_str();
    growth->add_option("--word-limit", word_limit, "0 selects the saturation search")->capture_default_str();
    growth->add_option("--margin", margin)->capture_default_str();
    auto* landau = app.add_subcommand("landau", "factorial form and Landau integrality");
    add_pair_options(landau, pa, true);
    auto* appendix = app.add_subcommand("appendix", "rank-3 appendix verifications");
    int example = 0;
    unsigned depth = 6;
    appendix->add_option("--example", example, "1..6")->required();
    appendix->add_option("--depth", depth, "Dirichlet word depth")->capture_default_str();
    for (auto* sub : app.get_subcommands({})) sub->add_option("--output", output, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return usage_error(e.what());
    }

    char* raw = nullptr;
    if (appendix->parsed()) {
        int st = ht_appendix(example, depth, &raw);
        Text j(raw);
        if (st != HT_OK) return report_error(st);
        return emit(j.get(), output);
    }

    ht_pair* praw = nullptr;
    int st = make_pair(pa, &praw);
    if (st < 0) return usage_error("give exactly one of --alpha/--beta, --name/--j/--k/--n or --example");
    std::unique_ptr<ht_pair, Freer> pair(praw);
    if (st != HT_OK) return report_error(st);

    if (classify->parsed() || family->parsed()) {
        st = ht_classify(pair.get(), &raw);
    } else if (landau->parsed()) {
        st = ht_landau(pair.get(), &raw);
    } else {
        ht_system* sraw = nullptr;
        st = ht_system_build(pair.get(), &sraw);
        std::unique_ptr<ht_system, Freer> sys(sraw);
        if (st != HT_OK) return report_error(st);
        if (build->parsed()) {
            st = ht_build_report(sys.get(), &raw);
        } else if (gram->parsed()) {
            st = ht_gram_report(sys.get(), &raw);
        } else if (certify->parsed()) {
            st = ht_certify(sys.get(), max_depth, budget, &raw);
        } else if (growth->parsed()) {
            char* csv = nullptr;
            st = ht_growth(sys.get(), tmin, tmax, points, word_limit, margin, &raw, &csv);
            Text j(raw), c(csv);
            if (!j) return report_error(st);
            int wst = emit(j.get(), output, c.get());
            return st != HT_OK ? st : wst;
        }
    }
    Text j(raw);
    if (!j) return report_error(st);
    int wst = emit(j.get(), output);
    return st != HT_OK ? st : wst;
}
