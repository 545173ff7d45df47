#include "wreathrep/json_io.hpp"

#include <stdexcept>

namespace wreathrep {

json tableau_to_json(const GTableau& T) {
    json shape = json::object();
    for (int s = 0; s < T.shape.components(); ++s)
        shape[std::to_string(s)] = T.shape.shapes[s];
    json entries = json::array();
    for (const auto& b : T.entry) entries.push_back({b.sigma, b.row, b.col});
    return json{{"shape", shape}, {"entries", entries}};
}

GTableau tableau_from_json(const json& j) {
    GTableau T;
    const auto& shape = j.at("shape");
    int t = 0;
    for (auto it = shape.begin(); it != shape.end(); ++it)
        t = std::max(t, std::stoi(it.key()) + 1);
    T.shape.shapes.resize(t);
    for (auto it = shape.begin(); it != shape.end(); ++it)
        T.shape.shapes[std::stoi(it.key())] = it.value().get<Partition>();
    for (const auto& e : j.at("entries"))
        T.entry.push_back(Box{e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
    if (!T.is_standard()) throw std::invalid_argument("tableau JSON is not standard");
    return T;
}

json gdiagram_to_json(const GYoungDiagram& mu) {
    json shape = json::object();
    for (int s = 0; s < mu.components(); ++s) shape[std::to_string(s)] = mu.shapes[s];
    return shape;
}

GYoungDiagram gdiagram_from_json(const json& j, int t) {
    GYoungDiagram mu;
    mu.shapes.resize(t);
    if (j.is_array()) {
        if (int(j.size()) > t)
            throw std::invalid_argument("diagram has more components than the group has "
                                        "irreducibles");
        for (size_t s = 0; s < j.size(); ++s) mu.shapes[s] = j[s].get<Partition>();
    } else if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            int s = std::stoi(it.key());
            if (s < 0 || s >= t) throw std::invalid_argument("component index out of range");
            mu.shapes[s] = it.value().get<Partition>();
        }
    } else {
        throw std::invalid_argument("diagram JSON must be an array or object");
    }
    for (const auto& p : mu.shapes)
        for (size_t r = 0; r + 1 < p.size(); ++r)
            if (p[r] < p[r + 1]) throw std::invalid_argument("partition parts must decrease");
    return mu;
}

json algebra_to_json(const AlgebraElement& a) {
    json out = json::array();
    for (const auto& [w, c] : a)
        out.push_back({{"g", w.g}, {"perm", w.perm}, {"coef", frac_string(c)}});
    return out;
}

AlgebraElement algebra_from_json(const json& j) {
    AlgebraElement a;
    for (const auto& term : j) {
        WreathElement w;
        w.g = term.at("g").get<std::vector<int>>();
        w.perm = term.at("perm").get<std::vector<int>>();
        if (w.g.size() != w.perm.size())
            throw std::invalid_argument("g and perm must have equal length");
        const auto& c = term.at("coef");
        Rational coef =
            c.is_string() ? parse_frac(c.get<std::string>()) : parse_frac(c.dump());
        Rational& slot = a[w];
        slot += coef;
        if (slot == 0) a.erase(w);
    }
    return a;
}

json sjb_to_json(const std::vector<SJChain>& sjb) {
    json out = json::array();
    for (const auto& C : sjb) {
        json entries = json::array();
        for (const auto& b : C.label.entry) entries.push_back({b.sigma, b.row, b.col});
        json vectors = json::array();
        for (const auto& v : C.vectors) {
            json terms = json::array();
            for (const auto& [key, c] : v)
                terms.push_back({{"subset", key}, {"coef", frac_string(c)}});
            vectors.push_back(terms);
        }
        out.push_back(
            {{"start_rank", C.start_rank}, {"tableau", entries}, {"vectors", vectors}});
    }
    return out;
}

json check_report_to_json(const CheckReport& rep) {
    json checks = json::array();
    for (const auto& it : rep.items) {
        json c = {{"name", it.name}, {"pass", it.pass}, {"residual", it.residual}};
        if (!it.detail.empty()) c["detail"] = it.detail;
        checks.push_back(c);
    }
    return json{{"pass", rep.all_pass()}, {"checks", checks}};
}

namespace {

json qext_entry(const QExt& v) { return v.str(); }

json cplx_entry(const std::complex<double>& v) { return json::array({v.real(), v.imag()}); }

template <class S, class F>
json matrix_to_json(const Matrix<S>& m, F entry) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(entry(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

template <class R, class F>
json rep_matrices(const R& rep, int n, int order, F entry) {
    json out = json::object();
    json cox = json::array();
    for (int i = 1; i < n; ++i) cox.push_back(matrix_to_json(rep.coxeter(i), entry));
    out["coxeter"] = cox;
    json factors = json::array();
    for (int l = 1; l <= n; ++l) {
        json per_g = json::array();
        for (int g = 0; g < order; ++g)
            per_g.push_back(matrix_to_json(rep.factor_action(l, g), entry));
        factors.push_back(per_g);
    }
    out["factor_action"] = factors;
    return out;
}

}  // namespace

json rep_to_json(const GZRep& rep, const std::string& group_name, int n) {
    json out;
    out["group"] = group_name;
    out["n"] = n;
    const GYoungDiagram& mu =
        rep.exact() ? rep.exact()->mu() : rep.approx()->mu();
    out["mu"] = gdiagram_to_json(mu);
    out["form"] = rep.form() == RepForm::seminormal ? "seminormal" : "orthogonal";
    out["scalar_kind"] = rep.kind() == ScalarKind::exact ? "exact" : "complex";
    out["dim"] = rep.dim();
    json tabs = json::array();
    for (const auto& T : rep.tableaux()) tabs.push_back(tableau_to_json(T));
    out["tableaux"] = tabs;
    const GroupTable& G = rep.exact() ? rep.exact()->group() : rep.approx()->group();
    json mats = rep.kind() == ScalarKind::exact
                    ? rep_matrices(*rep.exact(), n, G.order(), qext_entry)
                    : rep_matrices(*rep.approx(), n, G.order(), cplx_entry);
    out["matrices"] = mats;
    return out;
}

}  // namespace wreathrep
