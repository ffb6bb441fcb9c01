#include "heatkern/symbol_expr.hpp"

#include <cmath>

#include "heatkern/errors.hpp"
#include "heatkern/excision.hpp"

namespace heatkern {

SymbolExpr SymbolExpr::from_term(const HomogTerm& h, int qpow) {
    SymbolExpr e;
    e.add(qpow, h);
    return e;
}

void SymbolExpr::add(int qpow, const HomogTerm& h) {
    if (qpow < 0) throw config_error("SymbolExpr: negative placeholder power");
    if (h.is_zero()) return;
    auto& list = q_[qpow];
    for (auto& t : list) {
        if (t.same_degree(h)) {
            t += h;
            return;
        }
    }
    list.push_back(h);
}

void SymbolExpr::add(const SymbolExpr& o) {
    for (const auto& [j, list] : o.q_)
        for (const auto& h : list) add(j, h);
}

bool SymbolExpr::empty(double tol) const {
    for (const auto& [j, list] : q_)
        for (const auto& h : list)
            if (!h.is_zero(tol)) return false;
    return true;
}

double SymbolExpr::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [j, list] : q_)
        for (const auto& h : list) m = std::max(m, h.max_abs_coeff());
    return m;
}

int SymbolExpr::max_qpow() const {
    int m = 0;
    for (const auto& [j, list] : q_)
        if (!list.empty()) m = std::max(m, j);
    return m;
}

SymbolExpr SymbolExpr::scaled(Value s) const {
    SymbolExpr r;
    for (const auto& [j, list] : q_)
        for (const auto& h : list) r.add(j, h.scaled(s));
    return r;
}

SymbolExpr SymbolExpr::mul_trig_term(const HomogTerm& f) const {
    SymbolExpr r;
    for (const auto& [j, list] : q_)
        for (const auto& h : list) r.add(j, h * f);
    return r;
}

SymbolExpr SymbolExpr::mul_q() const {
    SymbolExpr r;
    for (const auto& [j, list] : q_)
        for (const auto& h : list) r.add(j + 1, h);
    return r;
}

SymbolExpr SymbolExpr::mul_principal_minus_lambda() const {
    SymbolExpr r;
    for (const auto& [j, list] : q_) {
        if (j < 1 && !list.empty())
            throw config_error(
                "SymbolExpr: (p0 - lambda) factor needs placeholder power >= 1");
        for (const auto& h : list) r.add(j - 1, h);
    }
    return r;
}

SymbolExpr SymbolExpr::operator*(const SymbolExpr& o) const {
    SymbolExpr r;
    for (const auto& [ja, la] : q_)
        for (const auto& ha : la)
            for (const auto& [jb, lb] : o.q_)
                for (const auto& hb : lb) r.add(ja + jb, ha * hb);
    return r;
}

SymbolExpr SymbolExpr::d_x(const HomogTerm& dx_p0) const {
    SymbolExpr r;
    for (const auto& [j, list] : q_) {
        for (const auto& h : list) {
            r.add(j, h.d_x());
            if (j > 0)
                r.add(j + 1, (h * dx_p0).scaled(-static_cast<double>(j)));
        }
    }
    return r;
}

SymbolExpr SymbolExpr::d_xi(const HomogTerm& dxi_p0) const {
    SymbolExpr r;
    for (const auto& [j, list] : q_) {
        for (const auto& h : list) {
            r.add(j, h.d_xi());
            if (j > 0)
                r.add(j + 1, (h * dxi_p0).scaled(-static_cast<double>(j)));
        }
    }
    return r;
}

SymbolExpr SymbolExpr::D_xi(const HomogTerm& dxi_p0) const {
    return d_xi(dxi_p0).scaled(Value(0.0, -1.0));
}

SymbolExpr::Value SymbolExpr::eval(const ClassicalSymbol& p, double x,
                                   double xi, Value lambda) const {
    const Value p0 = excision_chi(xi) * p.principal().eval_raw(x, xi);
    const Value qv = 1.0 / (p0 - lambda);
    Value s(0.0, 0.0);
    for (const auto& [j, list] : q_) {
        Value c(0.0, 0.0);
        for (const auto& h : list) c += h.eval(x, xi);
        s += c * std::pow(qv, j);
    }
    return s;
}

SymbolExpr compose_truncated(const SymbolExpr& a, const SymbolExpr& b, int M,
                             const ClassicalSymbol& p) {
    if (M < 1) throw config_error("compose_truncated: M must be >= 1");
    const HomogTerm dx_p0 = p.principal().d_x();
    const HomogTerm dxi_p0 = p.principal().d_xi();
    SymbolExpr c;
    SymbolExpr da = a;   // D_xi^alpha a
    SymbolExpr db = b;   // d_x^alpha b
    double fact = 1.0;
    for (int alpha = 0; alpha < M; ++alpha) {
        if (alpha > 0) {
            da = da.D_xi(dxi_p0);
            db = db.d_x(dx_p0);
            fact *= alpha;
        }
        c.add((da * db).scaled(1.0 / fact));
    }
    return c;
}

}  // namespace heatkern
