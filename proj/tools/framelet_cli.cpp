#include "framelet/cascade.hpp"
#include "framelet/design.hpp"
#include "framelet/dual.hpp"
#include "framelet/io.hpp"
#include "framelet/quasitight.hpp"
#include "framelet/smoothness.hpp"
#include "framelet/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace framelet;
using nlohmann::json;

namespace {

std::string order_str(const Order& o) { return order_to_string(o); }

void print_filter_report(const Filter& f, const DilationContext& ctx,
                         const std::string& group_name) {
    MomentReport rep = moment_report(f, ctx);
    std::cout << "sum rules:          " << order_str(rep.sr) << "\n"
              << "vanishing moments:  " << order_str(rep.vmo) << "\n"
              << "linear-phase:       " << order_str(rep.lpm) << "\n"
              << "interpolatory:      " << (is_interpolatory(f, ctx) ? "true" : "false")
              << "\n";
    if (!group_name.empty()) {
        SymmetryGroup G = group_by_name(group_name, ctx.dim);
        std::cout << "compatible:         " << (is_compatible(ctx, G) ? "true" : "false")
                  << "\n";
        auto t = detect_symmetry(f, G);
        if (t) {
            std::cout << "symmetry:           (" << G.name << ", [";
            for (size_t i = 0; i < t->center.size(); ++i)
                std::cout << (i ? "," : "") << rational_to_string(t->center[i]);
            std::cout << "], " << t->sign << ")\n";
        } else {
            std::cout << "symmetry:           none under " << G.name << "\n";
        }
    }
}

void print_bank_report(const BankReport& rep, bool as_json) {
    if (as_json) {
        json j;
        j["identity_holds"] = rep.identity_holds;
        if (rep.first_failing_entry)
            j["first_failing_entry"] = {rep.first_failing_entry->first,
                                        rep.first_failing_entry->second};
        if (!rep.failure_reason.empty()) j["failure_reason"] = rep.failure_reason;
        j["s"] = rep.s;
        j["vmo_sr_inequality"] = rep.vmo_sr_inequality;
        j["vmo_lpm_inequality"] = rep.vmo_lpm_inequality;
        auto dump = [](const std::vector<FilterDiagnostics>& ds) {
            json arr = json::array();
            for (const auto& d : ds)
                arr.push_back({{"vmo", d.vmo.value},
                               {"interpolatory_highpass", d.interpolatory_highpass}});
            return arr;
        };
        j["bs"] = dump(rep.bs);
        if (!rep.tbs.empty()) j["tbs"] = dump(rep.tbs);
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "identity: " << (rep.identity_holds ? "exact" : "FAILED") << "\n";
    if (rep.first_failing_entry)
        std::cout << "first failing entry: (" << rep.first_failing_entry->first << ","
                  << rep.first_failing_entry->second << ") " << rep.failure_reason << "\n";
    std::cout << "high-pass filters: " << rep.s << "\n";
    for (size_t i = 0; i < rep.bs.size(); ++i)
        std::cout << "  b" << (i + 1) << ": vmo=" << rep.bs[i].vmo.value
                  << " interpolatory-highpass=" << rep.bs[i].interpolatory_highpass << "\n";
    for (size_t i = 0; i < rep.tbs.size(); ++i)
        std::cout << "  tb" << (i + 1) << ": vmo=" << rep.tbs[i].vmo.value
                  << " interpolatory-highpass=" << rep.tbs[i].interpolatory_highpass << "\n";
}

Box parse_support(const std::string& s) {
    Box box;
    std::stringstream axes(s);
    std::string axis;
    while (std::getline(axes, axis, ',')) {
        auto colon = axis.find(':');
        if (colon == std::string::npos) throw FormatError("support axis needs lo:hi");
        box.lo.push_back(std::stol(axis.substr(0, colon)));
        box.hi.push_back(std::stol(axis.substr(colon + 1)));
    }
    if (box.lo.empty()) throw FormatError("empty support spec");
    return box;
}

SymmetryType parse_symmetry(const std::string& s, int dim) {
    auto at = s.find('@');
    SymmetryType t;
    std::string name = at == std::string::npos ? s : s.substr(0, at);
    t.group = group_by_name(name, dim);
    t.center.assign(dim, 0);
    if (at != std::string::npos) {
        std::stringstream cs(s.substr(at + 1));
        std::string c;
        int i = 0;
        while (std::getline(cs, c, ',') && i < dim) t.center[i++] = parse_rational(c);
    }
    t.sign = 1;
    return t;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"framelet filter bank toolbox"};
    app.require_subcommand(1);

    std::string filter_path, a_path, ta_path, bank_path, out_path, dilation, group,
        method = "eig", sym_spec, support_spec, format = "csv";
    unsigned n1 = 2, n2 = 2, m = 2, max_n = 12, sr = 0;
    int levels = 3;
    bool merge = false, as_json = false, interpolatory = false;

    auto* analyze = app.add_subcommand("analyze", "moment, symmetry, interpolatory report");
    analyze->add_option("--filter", filter_path)->required();
    analyze->add_option("--dilation", dilation)->required();
    analyze->add_option("--group", group);

    auto* dual = app.add_subcommand("dual", "construct a dual framelet filter bank");
    dual->add_option("--a", a_path)->required();
    dual->add_option("--ta", ta_path)->required();
    dual->add_option("--dilation", dilation)->required();
    dual->add_option("--n1", n1);
    dual->add_option("--n2", n2);
    dual->add_option("--out", out_path)->required();
    dual->add_flag("--merge-proportional", merge);

    auto* qt = app.add_subcommand("qt", "construct a quasi-tight framelet filter bank");
    qt->add_option("--a", a_path)->required();
    qt->add_option("--dilation", dilation)->required();
    qt->add_option("--m", m);
    qt->add_option("--out", out_path)->required();

    auto* verify = app.add_subcommand("verify", "check a bank file exactly");
    verify->add_option("--bank", bank_path)->required();
    verify->add_flag("--json", as_json);

    auto* sm2 = app.add_subcommand("sm2", "L2 smoothness estimate");
    sm2->add_option("--filter", filter_path)->required();
    sm2->add_option("--dilation", dilation)->required();
    sm2->add_option("--method", method)->check(CLI::IsMember({"eig", "norm", "both"}));
    sm2->add_option("--max-n", max_n);

    auto* design = app.add_subcommand("design", "parametrize a constrained filter family");
    design->add_option("--support", support_spec)->required();
    design->add_option("--dilation", dilation)->required();
    design->add_option("--sr", sr);
    design->add_flag("--interpolatory", interpolatory);
    design->add_option("--sym", sym_spec);
    design->add_option("--out", out_path)->required();

    auto* render = app.add_subcommand("render", "cascade samples of phi and the psi's");
    render->add_option("--bank", bank_path)->required();
    render->add_option("--levels", levels);
    render->add_option("--out", out_path)->required();
    render->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze) {
            DilationContext ctx = make_context(parse_dilation(dilation));
            Filter f = load_filter(filter_path);
            print_filter_report(f, ctx, group);
        } else if (*dual) {
            DilationContext ctx = make_context(parse_dilation(dilation));
            DualBank bank =
                build_dual_bank(load_filter(a_path), load_filter(ta_path), ctx, n1, n2, merge);
            save_bank(bank, out_path);
            std::cout << "dual bank with " << bank.bs.size()
                      << " high-pass pairs written to " << out_path << "\n";
        } else if (*qt) {
            DilationContext ctx = make_context(parse_dilation(dilation));
            QuasiTightBank bank = build_quasitight(load_filter(a_path), ctx, m);
            save_bank(bank, out_path);
            std::cout << "quasi-tight bank with " << bank.bs.size()
                      << " high-pass filters written to " << out_path << "\n";
        } else if (*verify) {
            AnyBank bank = load_bank(bank_path);
            BankReport rep = std::holds_alternative<DualBank>(bank)
                                 ? verify_dual_bank(std::get<DualBank>(bank))
                                 : verify_quasitight(std::get<QuasiTightBank>(bank));
            print_bank_report(rep, as_json);
            return rep.identity_holds ? 0 : 1;
        } else if (*sm2) {
            DilationContext ctx = make_context(parse_dilation(dilation));
            Filter f = load_filter(filter_path);
            auto run = [&](SmoothnessOptions::Method meth) {
                SmoothnessOptions opts;
                opts.method = meth;
                opts.max_n = max_n;
                SmoothnessEstimate est = sm2_estimate(f, ctx, opts);
                std::cout << est.method << ": sm2 = " << est.sm2 << "  sm_inf in ["
                          << est.sm_inf_lower << ", " << est.sm_inf_upper << "]"
                          << (est.flagged ? "  (flagged)" : "") << "\n";
            };
            if (method == "eig" || method == "both") run(SmoothnessOptions::Eig);
            if (method == "norm" || method == "both") run(SmoothnessOptions::NormIteration);
        } else if (*design) {
            DilationContext ctx = make_context(parse_dilation(dilation));
            DesignConstraints cs;
            cs.sr_order = sr;
            cs.interpolatory = interpolatory;
            if (!sym_spec.empty()) cs.symmetry = parse_symmetry(sym_spec, ctx.dim);
            AffineFilterFamily fam = parametrize(parse_support(support_spec), ctx, cs);
            json j;
            j["dilation"] = dilation_to_string(ctx.M);
            j["dimension"] = fam.dimension();
            j["base"] = filter_to_json(fam.base);
            j["directions"] = json::array();
            for (const auto& d : fam.directions) j["directions"].push_back(filter_to_json(d));
            std::ofstream out(out_path);
            if (!out) throw FormatError("cannot open " + out_path);
            out << j.dump(2) << "\n";
            std::cout << "family of dimension " << fam.dimension() << " written to "
                      << out_path << "\n";
        } else if (*render) {
            std::filesystem::create_directories(out_path);
            AnyBank bank = load_bank(bank_path);
            const DilationContext& ctx = std::visit(
                [](const auto& b) -> const DilationContext& { return b.ctx; }, bank);
            const Filter& a = std::visit(
                [](const auto& b) -> const Filter& { return b.a; }, bank);
            SampledGrid phi = subdivide_phi(a, ctx, levels);
            std::string ext = format == "csv" ? ".csv" : ".json";
            export_grid(phi, out_path + "/phi" + ext, format);
            const std::vector<Filter>& bs = std::visit(
                [](const auto& b) -> const std::vector<Filter>& { return b.bs; }, bank);
            for (size_t i = 0; i < bs.size(); ++i) {
                SampledGrid psi = sample_psi(bs[i], phi, ctx);
                export_grid(psi, out_path + "/psi" + std::to_string(i + 1) + ext, format);
            }
            std::cout << "wrote phi and " << bs.size() << " psi grids to " << out_path
                      << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
