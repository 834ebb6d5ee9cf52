#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "recomb/enumerator.hpp"
#include "recomb/errors.hpp"
#include "recomb/mcn_table.hpp"
#include "recomb/recombination.hpp"
#include "recomb/reference_table.hpp"
#include "recomb/svg.hpp"
#include "recomb/verification.hpp"

using json = nlohmann::ordered_json;
using namespace recomb;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr int kFingerprintCrossingLimit = 12;
constexpr int kPdCrossingLimit = 24;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

json fingerprint_json(const Fingerprint& fp) {
    json terms = json::array();
    for (auto [e, c] : fp.jones.terms()) terms.push_back({e, c});
    return {{"components", fp.components}, {"jones_exponent_scale", 4}, {"jones", terms}};
}

json envelope(const std::string& command, json inputs, json results) {
    return {{"command", command}, {"inputs", std::move(inputs)}, {"results", std::move(results)}, {"version", kVersion}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

FamilyParams tuple_of(const std::vector<int>& v) {
    if (v.size() != 4) throw UsageError("expected four integers p q r s");
    return {v[0], v[1], v[2], v[3]};
}

json tuple_json(const FamilyParams& f) { return json::array({f.p, f.q, f.r, f.s}); }

int cmd_predict(const std::string& substrate, const std::string& recombinase, std::optional<int> rounds) {
    auto sub = Substrate::parse(substrate);
    auto rec = Recombinase::parse(recombinase, rounds);
    auto pred = predict_products(sub, rec);
    json patterns = json::array(), details = json::array();
    for (const auto& p : pred.patterns) {
        patterns.push_back(p.pattern);
        details.push_back({{"pattern", p.pattern},
                           {"variables", p.variables},
                           {"branch", p.branch},
                           {"constraint", p.constraint.empty() ? json(nullptr) : json(p.constraint)}});
    }
    json inputs = {{"substrate", sub.to_string()}, {"recombinase", rec.to_string()}};
    if (rec.family == Recombinase::Family::Serine) inputs["rounds"] = rec.rounds;
    emit(envelope("predict", inputs, {{"patterns", patterns}, {"details", details}, {"notes", pred.notes}}));
    return 0;
}

int cmd_classify(const FamilyParams& raw) {
    auto f = normalize(raw);
    auto mf = minimal_form(f);
    json results = {{"normalized", tuple_json(f)},
                    {"case", std::string(case_name(mf.case_id))},
                    {"case_row", case_row(mf.case_id)},
                    {"kind", std::string(form_kind_name(mf.kind))},
                    {"form", mf.kind == FormKind::Trivial ? std::string("trivial") : to_string(mf.form)},
                    {"mcn", mf.mcn},
                    {"strands_moved", mf.strands_moved}};
    if (mf.mcn <= kFingerprintCrossingLimit) {
        auto fp = fingerprint(minimal_form_diagram(f, mf));
        results["fingerprint"] = fingerprint_json(fp);
        auto name = identify(fp, mf.mcn);
        results["name"] = name ? json(*name) : json(nullptr);
    }
    emit(envelope("classify", {{"tuple", tuple_json(raw)}}, results));
    return 0;
}

int cmd_theorem(int m, bool knots_only) {
    if (m < 1) throw UsageError("--m must be at least 1");
    json products = json::array(), names = json::array();
    for (const auto& p : xer_application(m + 1, knots_only)) {
        products.push_back({{"class", to_string(p.product)},
                            {"name", p.name ? json(*p.name) : json(nullptr)},
                            {"fingerprint", fingerprint_json(p.fp)}});
        names.push_back(p.name ? *p.name : to_string(p.product));
    }
    emit(envelope("theorem", {{"m", m}, {"knots_only", knots_only}},
                  {{"product_mcn", m + 1}, {"names", names}, {"products", products}}));
    return 0;
}

int cmd_count(int n_max, const std::string& csv_path) {
    if (n_max < 2) throw UsageError("--n-max must be at least 2");
    auto sweep = sweep_family(n_max);
    auto rows = count_report(sweep);
    std::ofstream(csv_path) << count_report_csv(rows);
    json jrows = json::array();
    for (const auto& r : rows)
        jrows.push_back({{"n", r.n},
                         {"raw_tuples", r.raw_tuples},
                         {"distinct", r.distinct},
                         {"bound", r.bound},
                         {"ratio_num", r.ratio.numerator()},
                         {"ratio_den", r.ratio.denominator()},
                         {"distinct_shapes", sweep.distinct_shapes.at(r.n)}});
    json collisions = json::array();
    for (const auto& c : sweep.collisions)
        collisions.push_back({{"first", to_string(c.first)},
                              {"first_mcn", c.first_mcn},
                              {"second", to_string(c.second)},
                              {"second_mcn", c.second_mcn}});
    emit(envelope("count", {{"n_max", n_max}},
                  {{"slack", sweep.slack}, {"rows", jrows}, {"csv", csv_path}, {"fingerprint_collisions", collisions}}));
    return 0;
}

int cmd_verify(int n_max) {
    VerifyOptions opt;
    opt.count_n_max = n_max;
    json checks = json::array();
    bool all = true;
    for (const auto& c : run_verification(opt)) {
        checks.push_back({{"criterion", c.criterion}, {"title", c.title}, {"passed", c.passed}, {"detail", c.detail}});
        all = all && c.passed;
    }
    emit(envelope("verify", {{"n_max", n_max}}, {{"all_passed", all}, {"checks", checks}}));
    return all ? 0 : 3;
}

int cmd_export(const FamilyParams& f, const std::string& format, const std::string& output) {
    std::string text;
    if (format == "pd") {
        if (f.raw_crossings() > kPdCrossingLimit)
            throw SizeError("pd export is limited to " + std::to_string(kPdCrossingLimit) + " crossings");
        text = to_pd(build_diagram(LinkClass::family(f)));
    } else {
        text = family_svg(f);
    }
    if (output.empty() || output == "-") {
        std::cout << text;
    } else {
        std::ofstream out(output);
        out << text;
        if (!out) throw std::runtime_error("cannot write " + output);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Site-specific recombination products: prediction, classification and enumeration"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string substrate, recombinase;
    std::optional<int> rounds;
    auto* predict = app.add_subcommand("predict", "Product patterns for a substrate and recombinase");
    predict->add_option("--substrate", substrate, "unknot, unlink or T(2,m)")->required();
    predict->add_option("--recombinase", recombinase, "serine or tyrosine")->required();
    predict->add_option("--rounds", rounds, "processive rounds (serine)");

    std::vector<int> tuple;
    auto* classify = app.add_subcommand("classify", "Case, minimal form and MCN of F(p,q,r,s)");
    classify->add_option("tuple", tuple, "p q r s")->required()->expected(4);

    int m = 0;
    bool knots_only = false;
    auto* theorem = app.add_subcommand("theorem", "Products of MCN m+1 from a T(2,m) substrate");
    theorem->add_option("--m", m, "substrate crossing number")->required();
    theorem->add_flag("--knots-only", knots_only, "keep single-component products");

    int n_max = 0;
    std::string csv = "count_report.csv";
    auto* count = app.add_subcommand("count", "Distinct family members by MCN");
    count->add_option("--n-max", n_max, "largest MCN")->required();
    count->add_option("--csv", csv, "CSV side file");

    int verify_n = kMaxEnumerationMcn;
    auto* verify = app.add_subcommand("verify", "Run the acceptance property suite");
    verify->add_option("--n-max", verify_n, "largest MCN for the growth check");

    std::vector<int> export_tuple;
    std::string format = "pd", output;
    auto* exp = app.add_subcommand("export", "PD code or SVG of the row diagram of F(p,q,r,s)");
    exp->add_option("tuple", export_tuple, "p q r s")->required()->expected(4);
    exp->add_option("--format", format, "pd or svg")->check(CLI::IsMember({"pd", "svg"}));
    exp->add_option("-o,--output", output, "output file, stdout by default");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*predict) return cmd_predict(substrate, recombinase, rounds);
        if (*classify) return cmd_classify(tuple_of(tuple));
        if (*theorem) return cmd_theorem(m, knots_only);
        if (*count) return cmd_count(n_max, csv);
        if (*verify) return cmd_verify(verify_n);
        if (*exp) return cmd_export(tuple_of(export_tuple), format, output);
    } catch (const SizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const InvariantError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
