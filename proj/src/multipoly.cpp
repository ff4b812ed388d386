#include "gcanon/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gcanon {

int exp_deg(const ExpVec& a, int nv) {
    int d = 0;
    for (int i = 0; i < nv; i++) d += a[i];
    return d;
}

int exp_cmp(const ExpVec& a, const ExpVec& b, int nv) {
    int da = exp_deg(a, nv), db = exp_deg(b, nv);
    if (da != db) return da < db ? -1 : 1;
    for (int i = 0; i < nv; i++) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

static bool term_before(int nv, const Term& x, const Term& y) {
    return exp_cmp(x.e, y.e, nv) > 0;
}

MultiPoly MultiPoly::constant(int nvars, const Rat& c) {
    MultiPoly p(nvars);
    if (c != 0) {
        Term t;
        t.e.fill(0);
        t.c = c;
        p.terms_.push_back(t);
    }
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int var, int pow) {
    if (var < 0 || var >= nvars) throw std::out_of_range("MultiPoly::variable");
    MultiPoly p(nvars);
    if (pow == 0) return constant(nvars, 1);
    Term t;
    t.e.fill(0);
    t.e[var] = static_cast<uint8_t>(pow);
    t.c = 1;
    p.terms_.push_back(t);
    return p;
}

MultiPoly MultiPoly::monomial(int nvars, const ExpVec& e, const Rat& c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_.push_back(Term{e, c});
    return p;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // Leading term has the highest degree under graded-lex.
    return exp_deg(terms_.front().e, nv_);
}

int MultiPoly::degree_in(int var) const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, int(t.e[var]));
    return d;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && exp_deg(terms_[0].e, nv_) == 0);
}

Rat MultiPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::logic_error("constant_value on non-constant");
    return terms_[0].c;
}

void MultiPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [this](const Term& x, const Term& y) { return term_before(nv_, x, y); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && exp_cmp(out.back().e, t.e, nv_) == 0) {
            out.back().c += t.c;
            if (out.back().c == 0) out.pop_back();
        } else if (t.c != 0) {
            out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
}

MultiPoly MultiPoly::from_terms(int nvars, std::vector<Term>&& ts) {
    MultiPoly p(nvars);
    p.terms_ = std::move(ts);
    p.normalize();
    return p;
}

void MultiPoly::add_term(const ExpVec& e, const Rat& c) {
    if (c == 0) return;
    Term t{e, c};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t,
                               [this](const Term& x, const Term& y) { return term_before(nv_, x, y); });
    if (it != terms_.end() && exp_cmp(it->e, e, nv_) == 0) {
        it->c += c;
        if (it->c == 0) terms_.erase(it);
    } else {
        terms_.insert(it, std::move(t));
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(*this);
    for (auto& t : p.terms_) t.c = -t.c;
    return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (nv_ != o.nv_ && !terms_.empty() && !o.terms_.empty())
        throw std::logic_error("MultiPoly ring mismatch");
    MultiPoly out(std::max(nv_, o.nv_));
    out.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = exp_cmp(terms_[i].e, o.terms_[j].e, out.nv_);
        if (c > 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            out.terms_.push_back(o.terms_[j++]);
        } else {
            Rat s = terms_[i].c + o.terms_[j].c;
            if (s != 0) out.terms_.push_back(Term{terms_[i].e, s});
            i++;
            j++;
        }
    }
    for (; i < terms_.size(); i++) out.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); j++) out.terms_.push_back(o.terms_[j]);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    *this = *this + o;
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    *this = *this - o;
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (terms_.empty() || o.terms_.empty()) return MultiPoly(std::max(nv_, o.nv_));
    if (nv_ != o.nv_) throw std::logic_error("MultiPoly ring mismatch");
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Term t;
            for (int k = 0; k < nv_; k++) {
                unsigned s = unsigned(a.e[k]) + unsigned(b.e[k]);
                if (s > 255u) throw std::overflow_error("MultiPoly exponent overflow");
                t.e[k] = static_cast<uint8_t>(s);
            }
            for (int k = nv_; k < kMaxVars; k++) t.e[k] = 0;
            t.c = a.c * b.c;
            prod.push_back(std::move(t));
        }
    }
    return from_terms(nv_, std::move(prod));
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
    if (c == 0) return MultiPoly(nv_);
    MultiPoly p(*this);
    for (auto& t : p.terms_) t.c *= c;
    return p;
}

MultiPoly operator*(const Rat& c, const MultiPoly& p) { return p * c; }

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); i++) {
        if (terms_[i].c != o.terms_[i].c) return false;
        if (exp_cmp(terms_[i].e, o.terms_[i].e, std::max(nv_, o.nv_)) != 0) return false;
    }
    return true;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly out(nv_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (t.e[var] == 0) continue;
        Term d = t;
        d.c *= int(t.e[var]);
        d.e[var]--;
        out.terms_.push_back(std::move(d));
    }
    // Dropping one exponent uniformly preserves graded-lex order only
    // within equal degrees; re-normalize to be safe.
    out.normalize();
    return out;
}

MultiPoly MultiPoly::set_var_zero(int var) const {
    MultiPoly out(nv_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (t.e[var] == 0) out.terms_.push_back(t);
    }
    return out;  // order is preserved by filtering
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& assignment) const {
    if (terms_.empty()) {
        int tnv = assignment.empty() ? nv_ : assignment[0].nvars();
        return MultiPoly(tnv);
    }
    int tnv = assignment.at(0).nvars();
    MultiPoly acc(tnv);
    for (const auto& t : terms_) {
        MultiPoly m = MultiPoly::constant(tnv, t.c);
        for (int v = 0; v < nv_; v++) {
            for (int k = 0; k < int(t.e[v]); k++) m = m * assignment.at(v);
        }
        acc += m;
    }
    return acc;
}

Rat MultiPoly::eval(const std::vector<Rat>& point) const {
    Rat acc(0);
    for (const auto& t : terms_) {
        Rat m = t.c;
        for (int v = 0; v < nv_; v++) {
            for (int k = 0; k < int(t.e[v]); k++) m *= point.at(v);
        }
        acc += m;
    }
    return acc;
}

double MultiPoly::eval_double(const std::vector<double>& point) const {
    // Kahan-compensated term accumulation.
    double sum = 0.0, comp = 0.0;
    for (const auto& t : terms_) {
        double m = t.c.get_d();
        for (int v = 0; v < nv_; v++) {
            for (int k = 0; k < int(t.e[v]); k++) m *= point[v];
        }
        double y = m - comp;
        double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    return sum;
}

std::optional<MultiPoly> MultiPoly::exact_divide(const MultiPoly& num, const MultiPoly& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num.is_zero()) return MultiPoly(num.nv_ ? num.nv_ : den.nv_);
    int nv = std::max(num.nv_, den.nv_);
    const Term& lt = den.terms_.front();
    MultiPoly rem = num;
    MultiPoly quot(nv);
    while (!rem.is_zero()) {
        const Term& lr = rem.terms_.front();
        ExpVec q;
        for (int k = 0; k < kMaxVars; k++) {
            if (lr.e[k] < lt.e[k]) return std::nullopt;
            q[k] = lr.e[k] - lt.e[k];
        }
        Rat qc = lr.c / lt.c;
        quot.add_term(q, qc);
        rem -= MultiPoly::monomial(nv, q, qc) * den;
    }
    return quot;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rat c = t.c;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool has_var = exp_deg(t.e, nv_) > 0;
        if (!has_var || c != 1) {
            os << c.get_str();
            if (has_var) os << "*";
        }
        bool first_var = true;
        for (int v = 0; v < nv_; v++) {
            if (t.e[v] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << "x" << (v + 1);
            if (t.e[v] > 1) os << "^" << int(t.e[v]);
        }
    }
    return os.str();
}

}  // namespace gcanon
