#include "framelet/io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace framelet {

using nlohmann::json;

IntMatrix parse_dilation(const std::string& s) {
    IntMatrix M;
    std::stringstream rows(s);
    std::string row;
    while (std::getline(rows, row, ';')) {
        std::stringstream cells(row);
        std::vector<long> r;
        long v;
        while (cells >> v) r.push_back(v);
        if (!r.empty()) M.push_back(std::move(r));
    }
    if (M.empty()) throw FormatError("empty dilation matrix: '" + s + "'");
    for (const auto& r : M)
        if (r.size() != M.size())
            throw FormatError("dilation matrix is not square: '" + s + "'");
    return M;
}

std::string dilation_to_string(const IntMatrix& M) {
    std::string out;
    for (size_t r = 0; r < M.size(); ++r) {
        for (size_t c = 0; c < M[r].size(); ++c) {
            out += std::to_string(M[r][c]);
            if (c + 1 < M[r].size()) out += " ";
        }
        if (r + 1 < M.size()) out += "; ";
    }
    return out;
}

json filter_to_json(const Filter& f) {
    json j;
    j["dim"] = f.dim();
    j["radicand"] = f.radicand().convert_to<long long>();
    auto sup = f.support();
    if (!sup) {
        j["support"] = json::array();
        j["coeffs"] = json::array();
        return j;
    }
    json support = json::array();
    for (int i = 0; i < f.dim(); ++i) support.push_back({sup->lo[i], sup->hi[i]});
    j["support"] = support;

    if (f.dim() == 1) {
        json row = json::array();
        for (long k = sup->lo[0]; k <= sup->hi[0]; ++k)
            row.push_back(rational_to_string(f.at({k})));
        j["coeffs"] = row;
    } else if (f.dim() == 2) {
        json rows = json::array();
        for (long k2 = sup->hi[1]; k2 >= sup->lo[1]; --k2) {
            json row = json::array();
            for (long k1 = sup->lo[0]; k1 <= sup->hi[0]; ++k1)
                row.push_back(rational_to_string(f.at({k1, k2})));
            rows.push_back(std::move(row));
        }
        j["coeffs"] = rows;
    } else {
        throw FormatError("filter files support dimensions 1 and 2 only");
    }
    return j;
}

Filter filter_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("support") ||
        !j.contains("coeffs"))
        throw FormatError("filter document must carry dim, support, and coeffs");
    int dim = j.at("dim").get<int>();
    if (dim != 1 && dim != 2) throw FormatError("filter files support dimensions 1 and 2 only");
    Integer radicand = 1;
    if (j.contains("radicand")) radicand = Integer(j.at("radicand").get<long long>());
    Rational scale = 1;
    if (j.contains("scale")) scale = parse_rational(j.at("scale").get<std::string>());

    Filter f(dim, radicand);
    const json& support = j.at("support");
    if (support.empty()) return f;
    if ((int)support.size() != dim) throw FormatError("support arity mismatch");
    Index lo(dim), hi(dim);
    for (int i = 0; i < dim; ++i) {
        lo[i] = support[i][0].get<long>();
        hi[i] = support[i][1].get<long>();
    }

    const json& coeffs = j.at("coeffs");
    if (dim == 1) {
        if ((long)coeffs.size() != hi[0] - lo[0] + 1)
            throw FormatError("coefficient row length does not match support");
        for (long k = lo[0]; k <= hi[0]; ++k) {
            Rational v = scale * parse_rational(coeffs[k - lo[0]].get<std::string>());
            if (v != 0) f.set({k}, v);
        }
    } else {
        if ((long)coeffs.size() != hi[1] - lo[1] + 1)
            throw FormatError("coefficient row count does not match support");
        for (long k2 = hi[1]; k2 >= lo[1]; --k2) {
            const json& row = coeffs[hi[1] - k2];
            if ((long)row.size() != hi[0] - lo[0] + 1)
                throw FormatError("coefficient row length does not match support");
            for (long k1 = lo[0]; k1 <= hi[0]; ++k1) {
                Rational v = scale * parse_rational(row[k1 - lo[0]].get<std::string>());
                if (v != 0) f.set({k1, k2}, v);
            }
        }
    }
    return f;
}

namespace {

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void write_json(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

}  // namespace

Filter load_filter(const std::string& path) { return filter_from_json(read_json(path)); }

void save_filter(const Filter& f, const std::string& path) {
    write_json(filter_to_json(f), path);
}

json bank_to_json(const DualBank& bank) {
    json j;
    j["kind"] = "dual";
    j["dilation"] = dilation_to_string(bank.ctx.M);
    j["a"] = filter_to_json(bank.a);
    j["ta"] = filter_to_json(bank.ta);
    j["bs"] = json::array();
    for (const auto& b : bank.bs) j["bs"].push_back(filter_to_json(b));
    j["tbs"] = json::array();
    for (const auto& tb : bank.tbs) j["tbs"].push_back(filter_to_json(tb));
    j["meta"] = {{"n1", bank.n1}, {"n2", bank.n2}};
    json prov = json::array();
    for (const auto& p : bank.provenance) prov.push_back(p.str());
    j["meta"]["provenance"] = prov;
    return j;
}

json bank_to_json(const QuasiTightBank& bank) {
    json j;
    j["kind"] = "quasitight";
    j["dilation"] = dilation_to_string(bank.ctx.M);
    j["a"] = filter_to_json(bank.a);
    j["bs"] = json::array();
    for (const auto& b : bank.bs) j["bs"].push_back(filter_to_json(b));
    j["eps"] = bank.eps;
    j["meta"] = {{"m", bank.m}};
    json prov = json::array();
    for (const auto& p : bank.provenance) prov.push_back(p.str());
    j["meta"]["provenance"] = prov;
    return j;
}

AnyBank load_bank(const std::string& path) {
    json j = read_json(path);
    std::string kind = j.at("kind").get<std::string>();
    DilationContext ctx = make_context(parse_dilation(j.at("dilation").get<std::string>()));
    if (kind == "dual") {
        DualBank bank{ctx, filter_from_json(j.at("a")), filter_from_json(j.at("ta")),
                      {},  {},                          {},
                      0,   0};
        for (const auto& b : j.at("bs")) bank.bs.push_back(filter_from_json(b));
        for (const auto& tb : j.at("tbs")) bank.tbs.push_back(filter_from_json(tb));
        if (j.contains("meta")) {
            bank.n1 = j["meta"].value("n1", 0u);
            bank.n2 = j["meta"].value("n2", 0u);
        }
        return bank;
    }
    if (kind == "quasitight") {
        QuasiTightBank bank{ctx, filter_from_json(j.at("a")), {}, {}, {}, 0};
        for (const auto& b : j.at("bs")) bank.bs.push_back(filter_from_json(b));
        bank.eps = j.at("eps").get<std::vector<int>>();
        if (j.contains("meta")) bank.m = j["meta"].value("m", 0u);
        return bank;
    }
    throw FormatError("unknown bank kind: " + kind);
}

void save_bank(const AnyBank& bank, const std::string& path) {
    std::visit([&](const auto& b) { write_json(bank_to_json(b), path); }, bank);
}

}  // namespace framelet
