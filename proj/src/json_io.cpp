#include "lexcount/json_io.hpp"

#include <algorithm>

namespace lexcount {

std::string dec_string(const mpz_class& v) {
    return v.get_str();
}

namespace {

mpz_class pow10(int e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return p;
}

} // namespace

std::string decimal_approx(const mpq_class& v, int significant_digits) {
    if (significant_digits < 1)
        throw std::invalid_argument("significant_digits must be positive");
    if (v == 0)
        return "0";

    mpz_class a = abs(v.get_num());
    mpz_class b = v.get_den();  // canonical: positive

    // decimal exponent e with 10^e <= a/b < 10^{e+1}
    int e = static_cast<int>(mpz_sizeinbase(a.get_mpz_t(), 10)) -
            static_cast<int>(mpz_sizeinbase(b.get_mpz_t(), 10));
    auto too_big = [&](int cand) {  // 10^{cand+1} <= a/b ?
        return (cand + 1 >= 0) ? (b * pow10(cand + 1) <= a)
                               : (b <= a * pow10(-cand - 1));
    };
    auto too_small = [&](int cand) {  // a/b < 10^cand ?
        return (cand >= 0) ? (a < b * pow10(cand)) : (a * pow10(-cand) < b);
    };
    while (too_big(e))
        ++e;
    while (too_small(e))
        --e;

    // scale to exactly significant_digits digits, rounding half up
    int k = significant_digits - 1 - e;
    mpz_class scaled;
    if (k >= 0)
        scaled = (2 * a * pow10(k) + b) / (2 * b);
    else
        scaled = (2 * a + b * pow10(-k)) / (2 * b * pow10(-k));
    if (scaled >= pow10(significant_digits)) {
        scaled /= 10;
        ++e;
    }

    std::string digits = scaled.get_str();
    std::string body;
    if (e >= significant_digits - 1 && e < significant_digits + 6) {
        body = digits + std::string(e - significant_digits + 1, '0');
    } else if (e >= 0 && e < significant_digits - 1) {
        body = digits.substr(0, e + 1) + "." + digits.substr(e + 1);
    } else if (e < 0 && e > -7) {
        body = "0." + std::string(-e - 1, '0') + digits;
    } else {
        body = digits.substr(0, 1) + "." + digits.substr(1) + "e" + std::to_string(e);
    }
    return (v < 0 ? "-" : "") + body;
}

namespace {

int require_letter(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw std::invalid_argument(std::string(what) + ": expected an integer");
    return j.get<int>();
}

std::vector<int> int_array(const json& j, const char* what) {
    if (!j.is_array())
        throw std::invalid_argument(std::string(what) + ": expected an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& x : j)
        out.push_back(require_letter(x, what));
    return out;
}

const json& require_field(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string(what) + ": missing field \"" + key + "\"");
    return j.at(key);
}

} // namespace

json to_json(const Partition& p) {
    return json(p.parts());
}

Partition partition_from_json(const json& j) {
    return Partition(int_array(j, "partition"));
}

json to_json(const SemistandardTableau& t) {
    json j;
    j["shape"] = to_json(t.shape());
    j["rows"] = t.rows();
    j["m"] = t.alphabet();
    return j;
}

SemistandardTableau tableau_from_json(const json& j) {
    Partition shape = partition_from_json(require_field(j, "shape", "tableau"));
    const json& jrows = require_field(j, "rows", "tableau");
    if (!jrows.is_array())
        throw std::invalid_argument("tableau: \"rows\" must be an array");
    std::vector<std::vector<int>> rows;
    for (const auto& r : jrows)
        rows.push_back(int_array(r, "tableau row"));
    int m = require_letter(require_field(j, "m", "tableau"), "tableau m");
    return SemistandardTableau(std::move(shape), std::move(rows), m);
}

json to_json(const Biword& a) {
    std::vector<int> u, v;
    for (const auto& c : a.columns()) {
        u.push_back(c.u);
        v.push_back(c.v);
    }
    json j;
    j["m"] = a.alphabet();
    j["u"] = u;
    j["v"] = v;
    return j;
}

Biword biword_from_json(const json& j) {
    int m = require_letter(require_field(j, "m", "biword"), "biword m");
    std::vector<int> u = int_array(require_field(j, "u", "biword"), "biword u");
    std::vector<int> v = int_array(require_field(j, "v", "biword"), "biword v");
    if (u.size() != v.size())
        throw std::invalid_argument("biword: rows u and v differ in length");
    std::vector<BiwordColumn> cols(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        cols[i] = {u[i], v[i]};
    return Biword(m, std::move(cols));
}

json to_json(const PlanarArray& x) {
    json rows = json::array();
    for (int i = 1; i <= x.dim(); ++i) {
        json row = json::array();
        for (int j = 1; j <= x.dim(); ++j)
            row.push_back(x.at(i, j));
        rows.push_back(std::move(row));
    }
    json j;
    j["m"] = x.dim();
    j["entries"] = std::move(rows);
    return j;
}

PlanarArray planar_array_from_json(const json& j) {
    int m = require_letter(require_field(j, "m", "planar array"), "planar array m");
    const json& jrows = require_field(j, "entries", "planar array");
    if (!jrows.is_array())
        throw std::invalid_argument("planar array: \"entries\" must be an array");
    std::vector<std::vector<long long>> rows;
    for (const auto& r : jrows) {
        if (!r.is_array())
            throw std::invalid_argument("planar array: each row must be an array");
        std::vector<long long> row;
        for (const auto& x : r) {
            if (!x.is_number_integer())
                throw std::invalid_argument("planar array: entries must be integers");
            row.push_back(x.get<long long>());
        }
        rows.push_back(std::move(row));
    }
    return PlanarArray(m, rows);
}

json to_json(const TableauPair& pair) {
    json j;
    j["p"] = to_json(pair.p);
    j["q"] = to_json(pair.q);
    return j;
}

TableauPair tableau_pair_from_json(const json& j) {
    return {tableau_from_json(require_field(j, "p", "tableau pair")),
            tableau_from_json(require_field(j, "q", "tableau pair"))};
}

json to_json(const PathChain& chain) {
    json pts = json::array();
    for (const auto& p : chain.points)
        pts.push_back(json::array({p.i, p.j}));
    return pts;
}

json to_json(const ZetaFactorEstimate& est) {
    json j;
    j["value"] = est.value;
    j["value_double"] = est.value_approx;
    j["prime_cutoff"] = est.prime_cutoff;
    j["series_cutoff"] = est.series_cutoff;
    j["precision_bits"] = est.precision_bits;
    return j;
}

json to_json(const LimitDiagnostic& diag, int significant_digits) {
    json entries = json::array();
    for (const auto& e : diag.entries) {
        json je;
        je["n"] = e.n;
        je["num"] = dec_string(e.value.get_num());
        je["den"] = dec_string(e.value.get_den());
        je["decimal"] = decimal_approx(e.value, significant_digits);
        entries.push_back(std::move(je));
    }
    json diffs = json::array();
    for (const auto& d : diag.successive_differences)
        diffs.push_back(decimal_approx(d, significant_digits));
    json j;
    j["label"] = diag.label;
    j["conditional_on_keating_snaith"] = diag.conditional_on_keating_snaith;
    j["decimal_precision"] = significant_digits;
    j["entries"] = std::move(entries);
    j["successive_differences"] = std::move(diffs);
    j["trend"] = diag.trend;
    return j;
}

} // namespace lexcount
