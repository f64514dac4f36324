// biquot: rational classification tables, integral cohomology and Pontrjagin
// class checks for biquotients with singly generated rational cohomology.
//
// Exit codes: 0 every check passed, 1 a check failed, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "biquot/biquot.hpp"
#include "biquot/verify.hpp"

namespace {

using namespace biquot;

enum class Format { table, json };

struct Options {
    int max_rank = kDefaultMaxRank;
    int n = 2;
    int n_max = 10;
    std::string format = "table";
    std::string catalog_path;
    std::string tables_path;
    bool include_trivial_h = false;
    bool allow_n1 = false;
    std::string g_spheres;
    std::string h_spheres;
    std::string type = "sphere:7";
    std::string space = "unit-tangent";
    std::string source = "normal-bundle";
    int samples = 0;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::optional<GroupCatalog> load_catalog_option(const Options& o)
{
    if (o.catalog_path.empty())
        return std::nullopt;
    std::ifstream in(o.catalog_path);
    if (!in)
        throw UsageError("cannot open catalog " + o.catalog_path);
    return parse_catalog(in);
}

CuratedTables load_tables_option(const Options& o)
{
    if (o.tables_path.empty())
        return builtin_tables();
    std::ifstream in(o.tables_path);
    if (!in)
        throw UsageError("cannot open tables " + o.tables_path);
    return parse_curated_tables(in);
}

SphereMultiset parse_spheres(const std::string& s)
{
    std::vector<int> out;
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != tok.size())
            throw UsageError("bad sphere dimension '" + tok + "'");
        out.push_back(v);
    }
    return make_multiset(out);
}

/// "sphere:D" or "truncated:DEG:M".
RationalType parse_type(const std::string& s)
{
    std::vector<std::string> parts;
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, ':'))
        parts.push_back(tok);
    try {
        if (parts.size() == 2 && parts[0] == "sphere")
            return RationalType::odd_sphere(std::stoi(parts[1]));
        if (parts.size() == 3 && parts[0] == "truncated")
            return RationalType::truncated(std::stoi(parts[1]), std::stoi(parts[2]));
    } catch (const std::logic_error&) {
    }
    throw UsageError("type must be sphere:D or truncated:DEG:M, got '" + s + "'");
}

int emit(const Report& report, Format fmt, const nlohmann::json& extra = {})
{
    if (fmt == Format::json) {
        nlohmann::json j = report;
        for (auto it = extra.begin(); it != extra.end(); ++it)
            j[it.key()] = it.value();
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << render_table(report);
    }
    return report.passed() ? 0 : 1;
}

nlohmann::json groups_json(const GradedAbelianGroup& g, const DividedRing* ring)
{
    nlohmann::json groups = nlohmann::json::array();
    for (const auto& [k, d] : g.nonzero())
        groups.push_back({{"degree", k}, {"free_rank", d.free_rank}, {"torsion", d.torsion}});
    nlohmann::json j = {{"top_degree", g.top_degree()}, {"groups", groups}};
    if (ring) {
        j["gen_degree"] = ring->gen_degree();
        j["divisibility"] = ring->divisibility();
    }
    return j;
}

int cmd_catalog(const Options& o, Format fmt)
{
    auto override = load_catalog_option(o);
    const GroupCatalog catalog = override ? *override : builtin_catalog(o.max_rank);
    return emit(sphere_table_report(catalog), fmt);
}

int cmd_match(const Options& o, Format fmt)
{
    auto override = load_catalog_option(o);
    const GroupCatalog catalog = override ? *override : builtin_catalog(o.max_rank);
    return emit(pair_table_report(catalog, load_tables_option(o), o.include_trivial_h), fmt);
}

int cmd_balance(const Options& o, Format fmt)
{
    if (o.g_spheres.empty())
        throw UsageError("balance needs --g-spheres");
    const auto g = parse_spheres(o.g_spheres);
    const auto h = o.h_spheres.empty() ? SphereMultiset{} : parse_spheres(o.h_spheres);
    const auto t = parse_type(o.type);
    const auto model = minimal_model(t);

    std::string model_text;
    for (const auto& gen : model.generators)
        model_text += std::string(model_text.empty() ? "" : ", ") + gen.name + ": " +
                      std::to_string(gen.degree) +
                      (gen.differential_power ? " (d = x^" + std::to_string(gen.differential_power) + ")"
                                              : "");
    Report report{"rational balance", {}};
    report.records.push_back(
        ReportRecord{"G " + to_string(g) + " / H " + to_string(h) + " ~ " + t.describe(), {}}
            .add("balance", rational_balance(g, h, t), "minimal model " + model_text));
    return emit(report, fmt);
}

int cmd_cohomology(const Options& o, Format fmt)
{
    GradedAbelianGroup groups;
    std::optional<DividedRing> ring;
    FibrationSpec spec;
    std::string name;
    if (o.space == "unit-tangent") {
        groups = unit_tangent_cohomology(o.n, o.allow_n1);
        spec = unit_tangent_fibration(o.n, o.allow_n1);
        name = "T1S^" + std::to_string(2 * o.n);
    } else if (o.space == "circle-quotient") {
        auto r = circle_quotient_ring(o.n);
        groups = r.groups;
        ring = r.ring;
        spec = circle_quotient_fibration(o.n);
        name = "dSO(2)\\SO(" + std::to_string(2 * o.n + 1) + ")/SO(" + std::to_string(2 * o.n - 1) + ")";
    } else if (o.space == "quaternionic") {
        auto r = quaternionic_quotient_ring(o.n);
        groups = r.groups;
        ring = r.ring;
        spec = quaternionic_quotient_fibration(o.n);
        name = "dSU(2)\\SO(" + std::to_string(4 * o.n + 1) + ")/SO(" + std::to_string(4 * o.n - 1) + ")";
    } else if (o.space == "g2-su2") {
        groups = g2_su2_cohomology().cohomology;
        spec = g2_su2_fibration();
        name = "G2//SU(2)";
    } else {
        throw UsageError("unknown space '" + o.space + "'");
    }

    Report report{"cohomology of " + name, {}};
    const auto result = check_gysin_consistency(spec);
    report.records.push_back(ReportRecord{name, {}}
                                 .add("groups", true, groups.describe())
                                 .add("gysin", result.pass, result.diagnostics));
    if (o.space == "g2-su2")
        report.records.back().add("homology", true, g2_su2_cohomology().homology.describe());

    const DividedRing* rp = ring ? &*ring : nullptr;
    if (fmt == Format::table)
        std::cout << to_text(groups, rp);
    return emit(report, fmt, {{"cohomology", groups_json(groups, rp)}});
}

int cmd_pontrjagin(const Options& o, Format fmt)
{
    const auto rel_m = circle_quotient_relation(o.n);
    const auto rel_n = grassmannian_relation(o.n);
    Report report{"first Pontrjagin classes (n=" + std::to_string(o.n) + ")", {}};
    report.records.push_back(ReportRecord{"dSO(2)\\SO(2n+1)/SO(2n-1)", {}}.add(
        "p1", true, rel_m.describe() + " => p1 = " + std::to_string(solve_p1_tangent(rel_m)) + " a^2"));
    report.records.push_back(ReportRecord{"SO(2n+1)/(SO(2n-1)xSO(2))", {}}.add(
        "p1", true, rel_n.describe() + " => p1 = " + std::to_string(solve_p1_tangent(rel_n)) + " a^2"));
    return emit(report, fmt);
}

int cmd_distinguish(const Options& o, Format fmt)
{
    const auto v = distinguish_cp_pair(o.n);
    Report report{"Pontrjagin class distinction", {v.to_record()}};
    if (fmt == Format::table)
        for (const auto& line : v.trace)
            std::cout << "  " << line << '\n';
    return emit(report, fmt,
                {{"trace", v.trace},
                 {"orders", {v.order_biquotient, v.order_grassmannian}},
                 {"verdict", v.not_homeomorphic ? "not homeomorphic" : "undecided"}});
}

int cmd_weights(const Options& o, Format fmt)
{
    const int max_weight = 4;
    const int samples = o.samples ? o.samples : 4 * max_weight + 9;
    WeightDecomposition w;
    std::string name;
    if (o.source == "normal-bundle") {
        name = "normal bundle under geodesic flow";
        w = weight_decompose([](double t) { return normal_bundle_action(t).trace(); }, 3,
                             max_weight, samples);
    } else if (o.source == "diagonal") {
        name = "normal bundle under diagonal Hopf action";
        const auto [x, y] = detail::sample_unit_tangent(o.n);
        w = weight_decompose(
            [&](double t) { return normal_frame_action(hopf_diagonal_action(o.n, t), x, y).trace(); },
            3, max_weight, samples);
    } else if (o.source == "geodesic") {
        name = "geodesic flow on R^" + std::to_string(4 * o.n + 2);
        w = weight_decompose([&](double t) { return geodesic_flow_action(o.n, t).trace(); },
                             4 * o.n + 2, max_weight, samples);
    } else if (o.source == "hopf") {
        name = "diagonal Hopf action on R^" + std::to_string(4 * o.n + 2);
        w = weight_decompose([&](double t) { return hopf_diagonal_action(o.n, t).trace(); },
                             4 * o.n + 2, max_weight, samples);
    } else {
        throw UsageError("unknown source '" + o.source + "'");
    }
    Report report{"circle representation weights", {}};
    report.records.push_back(ReportRecord{name, {}}.add(
        "weights", true, describe(w) + ", residual " + std::to_string(w.residual)));
    nlohmann::json mult = nlohmann::json::object();
    for (const auto& [weight, m] : w.multiplicities)
        mult[std::to_string(weight)] = m;
    return emit(report, fmt, {{"multiplicities", mult}});
}

int cmd_verify(const Options& o, Format fmt)
{
    auto override = load_catalog_option(o);
    const auto tables = load_tables_option(o);
    return emit(verify_all(o.max_rank, o.n_max, tables, override ? &*override : nullptr), fmt);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Classification checks for biquotients with singly generated rational cohomology"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember({"table", "json"}));
    };
    auto add_catalog = [&](CLI::App* sub) {
        sub->add_option("--max-rank", o.max_rank, "Largest rank in the built-in catalog")
            ->check(CLI::Range(1, 64));
        sub->add_option("--catalog", o.catalog_path, "Catalog override file (`family rank` lines)");
    };
    auto add_n = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "Family parameter n")->check(CLI::Range(1, 1000));
    };

    auto* catalog = app.add_subcommand("catalog", "Sphere dimensions and rational coincidences");
    add_catalog(catalog);
    add_format(catalog);

    auto* match = app.add_subcommand("match", "Enumerate rational odd-sphere pairs G/H");
    add_catalog(match);
    add_format(match);
    match->add_flag("--include-trivial-h", o.include_trivial_h, "Also match H = {e}");
    match->add_option("--tables", o.tables_path, "Curated table override (JSON)");

    auto* balance = app.add_subcommand("balance", "Rational homotopy balance of G, H and a type");
    balance->add_option("--g-spheres", o.g_spheres, "Sphere dimensions of G, e.g. 3,11")->required();
    balance->add_option("--h-spheres", o.h_spheres, "Sphere dimensions of H (1 per circle)");
    balance->add_option("--type", o.type, "sphere:D or truncated:DEG:M");
    add_format(balance);

    auto* cohomology = app.add_subcommand("cohomology", "Integral cohomology with Gysin check");
    cohomology->add_option("--space", o.space, "Space")
        ->check(CLI::IsMember({"unit-tangent", "circle-quotient", "quaternionic", "g2-su2"}));
    add_n(cohomology);
    cohomology->add_flag("--allow-n1", o.allow_n1, "Permit n = 1 for the unit tangent bundle");
    add_format(cohomology);

    auto* pontrjagin = app.add_subcommand("pontrjagin", "p1 of the rational CP^{2n-1} pair");
    add_n(pontrjagin);
    add_format(pontrjagin);

    auto* distinguish = app.add_subcommand("distinguish", "Compare |H^4 / <p1>| of the CP^{2n-1} pair");
    add_n(distinguish);
    add_format(distinguish);

    auto* weights = app.add_subcommand("weights", "Weight decomposition of circle actions");
    weights->add_option("--source", o.source, "Action")
        ->check(CLI::IsMember({"normal-bundle", "diagonal", "geodesic", "hopf"}));
    add_n(weights);
    weights->add_option("--samples", o.samples, "Number of sample points");
    add_format(weights);

    auto* verify = app.add_subcommand("verify-tables", "Run every table and closed-form check");
    add_catalog(verify);
    verify->add_option("--n-max", o.n_max, "Largest family parameter")->check(CLI::Range(2, 200));
    verify->add_option("--tables", o.tables_path, "Curated table override (JSON)");
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return 2;
    }

    const Format fmt = o.format == "json" ? Format::json : Format::table;
    try {
        if (catalog->parsed())
            return cmd_catalog(o, fmt);
        if (match->parsed())
            return cmd_match(o, fmt);
        if (balance->parsed())
            return cmd_balance(o, fmt);
        if (cohomology->parsed())
            return cmd_cohomology(o, fmt);
        if (pontrjagin->parsed())
            return cmd_pontrjagin(o, fmt);
        if (distinguish->parsed())
            return cmd_distinguish(o, fmt);
        if (weights->parsed())
            return cmd_weights(o, fmt);
        if (verify->parsed())
            return cmd_verify(o, fmt);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n' << app.help();
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "check failed: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
