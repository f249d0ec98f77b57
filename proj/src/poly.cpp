#include "symineq/poly.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <numeric>
#include <stdexcept>
#include <string_view>

namespace symineq {

bool GrlexLess::operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
    const auto da = std::accumulate(a.begin(), a.end(), 0ul);
    const auto db = std::accumulate(b.begin(), b.end(), 0ul);
    if (da != db) return da < db;
    return a < b;
}

namespace {

bool valid_var_name(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
    return std::all_of(name.begin(), name.end(), [](char ch) {
        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
    });
}

std::string monomial_str(const std::vector<std::string>& vars,
                         const std::vector<unsigned>& exps) {
    std::string out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!out.empty()) out += ' ';
        out += vars[i];
        if (exps[i] > 1) {
            out += '^';
            out += std::to_string(exps[i]);
        }
    }
    return out.empty() ? "1" : out;
}

}  // namespace

SparsePoly::SparsePoly(const Rat& c) {
    if (c != 0) terms_.emplace(Exponents{}, c);
}

SparsePoly::SparsePoly(long c) : SparsePoly(Rat(c)) {}

SparsePoly::SparsePoly(std::vector<std::string> vars, TermMap terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
    normalize();
}

SparsePoly SparsePoly::variable(const std::string& name) {
    if (!valid_var_name(name))
        throw std::invalid_argument("invalid variable name '" + name + "'");
    SparsePoly p;
    p.vars_ = {name};
    p.terms_.emplace(Exponents{1}, Rat(1));
    return p;
}

SparsePoly SparsePoly::monomial(const Rat& coeff, const std::map<std::string, unsigned>& mono) {
    SparsePoly p;
    if (coeff == 0) return p;
    for (const auto& [name, e] : mono) {
        (void)e;
        if (!valid_var_name(name))
            throw std::invalid_argument("invalid variable name '" + name + "'");
        p.vars_.push_back(name);  // map keys are already sorted and unique
    }
    Exponents exps;
    exps.reserve(mono.size());
    for (const auto& [name, e] : mono) {
        (void)name;
        exps.push_back(e);
    }
    p.terms_.emplace(std::move(exps), coeff);
    p.normalize();
    return p;
}

Rat SparsePoly::constant_value() const {
    if (!vars_.empty()) throw std::logic_error("constant_value on non-constant polynomial");
    return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

unsigned SparsePoly::total_degree() const {
    if (terms_.empty()) return 0;
    const auto& lead = terms_.rbegin()->first;  // grlex max has max total degree
    return std::accumulate(lead.begin(), lead.end(), 0u);
}

unsigned SparsePoly::degree_in(const std::string& var) const {
    const auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return 0;
    const auto idx = static_cast<std::size_t>(it - vars_.begin());
    unsigned deg = 0;
    for (const auto& [e, c] : terms_) {
        (void)c;
        deg = std::max(deg, e[idx]);
    }
    return deg;
}

Rat SparsePoly::coefficient(const std::map<std::string, unsigned>& mono) const {
    Exponents e(vars_.size(), 0);
    for (const auto& [name, k] : mono) {
        if (k == 0) continue;
        const auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
        if (it == vars_.end() || *it != name) return Rat(0);
        e[static_cast<std::size_t>(it - vars_.begin())] = k;
    }
    const auto t = terms_.find(e);
    return t == terms_.end() ? Rat(0) : t->second;
}

void SparsePoly::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
    if (vars_.empty()) return;
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_) {
        (void)c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) used[i] = true;
    }
    if (std::find(used.begin(), used.end(), false) == used.end()) return;
    std::vector<std::string> nv;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) nv.push_back(vars_[i]);
    TermMap nt;
    for (const auto& [e, c] : terms_) {
        Exponents ne;
        ne.reserve(nv.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            if (used[i]) ne.push_back(e[i]);
        nt.emplace(std::move(ne), c);
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
}

SparsePoly SparsePoly::embedded(const std::vector<std::string>& newvars) const {
    if (newvars == vars_) return *this;
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        const auto it = std::lower_bound(newvars.begin(), newvars.end(), vars_[i]);
        pos[i] = static_cast<std::size_t>(it - newvars.begin());
    }
    SparsePoly out;
    out.vars_ = newvars;
    for (const auto& [e, c] : terms_) {
        Exponents ne(newvars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        out.terms_.emplace(std::move(ne), c);
    }
    return out;  // intentionally not normalized: callers finish the arithmetic first
}

std::vector<std::string> SparsePoly::merged_vars(const SparsePoly& a, const SparsePoly& b) {
    std::vector<std::string> mv;
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(mv));
    return mv;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly out = *this;
    for (auto& [e, c] : out.terms_) {
        (void)e;
        c = -c;
    }
    return out;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    const auto mv = merged_vars(*this, o);
    SparsePoly a = embedded(mv);
    const SparsePoly b = o.embedded(mv);
    for (const auto& [e, c] : b.terms_) {
        const auto [it, fresh] = a.terms_.emplace(e, c);
        if (!fresh) it->second += c;
    }
    a.normalize();
    return *this = std::move(a);
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) { return *this += -o; }

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) {
    const auto mv = merged_vars(*this, o);
    const SparsePoly a = embedded(mv);
    const SparsePoly b = o.embedded(mv);
    SparsePoly out;
    out.vars_ = mv;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(mv.size());
            for (std::size_t i = 0; i < mv.size(); ++i) e[i] = ea[i] + eb[i];
            const Rat c = ca * cb;
            const auto [it, fresh] = out.terms_.emplace(std::move(e), c);
            if (!fresh) it->second += c;
        }
    }
    out.normalize();
    return *this = std::move(out);
}

SparsePoly& SparsePoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        vars_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) {
        (void)e;
        coeff *= c;
    }
    return *this;
}

SparsePoly SparsePoly::pow(unsigned k) const {
    SparsePoly result(Rat(1));
    SparsePoly base = *this;
    while (k != 0) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k != 0) base *= base;
    }
    return result;
}

SparsePoly SparsePoly::differentiate(const std::string& var) const {
    const auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return SparsePoly();  // constant in var
    const auto idx = static_cast<std::size_t>(it - vars_.begin());
    SparsePoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[idx] == 0) continue;
        Exponents ne = e;
        ne[idx] -= 1;
        out.terms_.emplace(std::move(ne), c * e[idx]);
    }
    out.normalize();
    return out;
}

SparsePoly SparsePoly::substitute(const std::map<std::string, SparsePoly>& repl) const {
    std::vector<SparsePoly> image;
    image.reserve(vars_.size());
    for (const auto& name : vars_) {
        const auto it = repl.find(name);
        image.push_back(it != repl.end() ? it->second : variable(name));
    }
    // lazily grown power tables keep repeated exponents cheap
    std::vector<std::vector<SparsePoly>> powers(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) powers[i] = {SparsePoly(Rat(1))};
    auto power = [&](std::size_t i, unsigned e) -> const SparsePoly& {
        auto& tab = powers[i];
        while (tab.size() <= e) tab.push_back(tab.back() * image[i]);
        return tab[e];
    };
    SparsePoly out;
    for (const auto& [e, c] : terms_) {
        SparsePoly term(c);
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (e[i] != 0) term *= power(i, e[i]);
        out += term;
    }
    return out;
}

SparsePoly SparsePoly::evaluate_partial(const std::map<std::string, Rat>& point) const {
    std::map<std::string, SparsePoly> repl;
    for (const auto& [name, value] : point) repl.emplace(name, SparsePoly(value));
    return substitute(repl);
}

Rat SparsePoly::evaluate(const std::map<std::string, Rat>& point) const {
    std::vector<Rat> vals(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        const auto it = point.find(vars_[i]);
        if (it == point.end())
            throw std::invalid_argument("evaluate: unbound variable '" + vars_[i] + "'");
        vals[i] = it->second;
    }
    Rat sum = 0;
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (std::size_t i = 0; i < vals.size(); ++i)
            if (e[i] != 0) term *= rat_pow(vals[i], e[i]);
        sum += term;
    }
    return sum;
}

std::vector<SparsePoly> SparsePoly::collect_coefficients(const std::string& var) const {
    const auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return {*this};
    const auto idx = static_cast<std::size_t>(it - vars_.begin());
    std::vector<std::string> rest = vars_;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(idx));
    std::vector<SparsePoly> out(degree_in(var) + 1);
    for (auto& p : out) p.vars_ = rest;
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        ne.erase(ne.begin() + static_cast<std::ptrdiff_t>(idx));
        out[e[idx]].terms_.emplace(std::move(ne), c);
    }
    for (auto& p : out) p.normalize();
    return out;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;  // canonical form makes this sound
}

std::string SparsePoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const bool neg = sgn(it->second) < 0;
        const Rat a = abs(it->second);
        std::string mono;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            const unsigned e = it->first[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += ' ';
            mono += vars_[i];
            if (e > 1) {
                mono += '^';
                mono += std::to_string(e);
            }
        }
        if (first) {
            if (neg) out += '-';
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (mono.empty())
            out += rat_str(a);
        else if (a == 1)
            out += mono;
        else
            out += rat_str(a) + " * " + mono;
    }
    return out;
}

namespace {

// recursive-descent parser over the grammar printed by str();
// juxtaposition multiplies, '/' only appears inside rational literals
class PolyParser {
public:
    explicit PolyParser(std::string_view text) : s_(text) { advance(); }

    SparsePoly run() {
        SparsePoly p = parse_expr();
        if (tok_ != Tok::end) fail("trailing input");
        return p;
    }

private:
    enum class Tok { number, name, plus, minus, star, caret, lparen, rparen, end };

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at offset " +
                                    std::to_string(pos_) + ": " + what);
    }

    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ >= s_.size()) {
            tok_ = Tok::end;
            return;
        }
        const char ch = s_[pos_];
        switch (ch) {
            case '+': tok_ = Tok::plus; ++pos_; return;
            case '-': tok_ = Tok::minus; ++pos_; return;
            case '*': tok_ = Tok::star; ++pos_; return;
            case '^': tok_ = Tok::caret; ++pos_; return;
            case '(': tok_ = Tok::lparen; ++pos_; return;
            case ')': tok_ = Tok::rparen; ++pos_; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            number_is_int_ = true;
            if (pos_ + 1 < s_.size() && s_[pos_] == '/' &&
                std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
                ++pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                number_is_int_ = false;
            }
            number_ = rat_parse(std::string(s_.substr(start, pos_ - start)));
            tok_ = Tok::number;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            name_ = std::string(s_.substr(start, pos_ - start));
            tok_ = Tok::name;
            return;
        }
        fail(std::string("unexpected character '") + ch + "'");
    }

    SparsePoly parse_expr() {
        int sign = 1;
        if (tok_ == Tok::plus) {
            advance();
        } else if (tok_ == Tok::minus) {
            sign = -1;
            advance();
        }
        SparsePoly acc = parse_term();
        if (sign < 0) acc *= Rat(-1);
        while (tok_ == Tok::plus || tok_ == Tok::minus) {
            const bool sub = tok_ == Tok::minus;
            advance();
            const SparsePoly t = parse_term();
            if (sub)
                acc -= t;
            else
                acc += t;
        }
        return acc;
    }

    SparsePoly parse_term() {
        SparsePoly acc = parse_factor();
        for (;;) {
            if (tok_ == Tok::star) {
                advance();
                acc *= parse_factor();
            } else if (tok_ == Tok::number || tok_ == Tok::name || tok_ == Tok::lparen) {
                acc *= parse_factor();
            } else {
                break;
            }
        }
        return acc;
    }

    SparsePoly parse_factor() {
        SparsePoly base = parse_base();
        if (tok_ != Tok::caret) return base;
        advance();
        if (tok_ != Tok::number || !number_is_int_) fail("exponent must be a nonnegative integer");
        if (!number_.get_num().fits_uint_p()) fail("exponent too large");
        const unsigned e = static_cast<unsigned>(number_.get_num().get_ui());
        advance();
        return base.pow(e);
    }

    SparsePoly parse_base() {
        switch (tok_) {
            case Tok::number: {
                SparsePoly p{number_};
                advance();
                return p;
            }
            case Tok::name: {
                SparsePoly p = SparsePoly::variable(name_);
                advance();
                return p;
            }
            case Tok::lparen: {
                advance();
                SparsePoly p = parse_expr();
                if (tok_ != Tok::rparen) fail("expected ')'");
                advance();
                return p;
            }
            default:
                fail("expected number, variable or '('");
        }
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    Tok tok_ = Tok::end;
    Rat number_;
    bool number_is_int_ = false;
    std::string name_;
};

}  // namespace

SparsePoly SparsePoly::parse(const std::string& text) { return PolyParser(text).run(); }

SparsePoly exact_divide(const SparsePoly& f, const SparsePoly& g) {
    if (g.is_zero()) throw std::domain_error("exact_divide by zero polynomial");
    if (f.is_zero()) return SparsePoly();
    const auto mv = SparsePoly::merged_vars(f, g);
    SparsePoly::TermMap r = f.embedded(mv).terms_;
    const SparsePoly den = g.embedded(mv);
    const auto& [eg, cg] = *den.terms_.rbegin();
    SparsePoly::TermMap q;
    while (!r.empty()) {
        const auto lead = std::prev(r.end());
        const auto& er = lead->first;
        SparsePoly::Exponents e(mv.size());
        for (std::size_t i = 0; i < mv.size(); ++i) {
            if (er[i] < eg[i])
                throw divisibility_error("leading term " + monomial_str(mv, er) +
                                         " is not divisible by " + monomial_str(mv, eg));
            e[i] = er[i] - eg[i];
        }
        const Rat coef = lead->second / cg;
        const auto [qit, fresh] = q.emplace(e, coef);
        if (!fresh) qit->second += coef;
        for (const auto& [ed, cd] : den.terms_) {
            SparsePoly::Exponents em(mv.size());
            for (std::size_t i = 0; i < mv.size(); ++i) em[i] = e[i] + ed[i];
            const Rat delta = coef * cd;
            const auto it = r.find(em);
            if (it == r.end()) {
                r.emplace(std::move(em), -delta);
            } else {
                it->second -= delta;
                if (it->second == 0) r.erase(it);
            }
        }
    }
    return SparsePoly(mv, std::move(q));
}

RationalFunction::RationalFunction(SparsePoly num, SparsePoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    reduce();
}

RationalFunction RationalFunction::from_poly(SparsePoly p) {
    return RationalFunction(std::move(p), SparsePoly(Rat(1)));
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = SparsePoly(Rat(1));
        return;
    }
    Rat g(0);
    for (const auto& [e, c] : num_.terms()) {
        (void)e;
        g = rat_gcd(g, c);
    }
    for (const auto& [e, c] : den_.terms()) {
        (void)e;
        g = rat_gcd(g, c);
    }
    const Rat inv = Rat(1) / g;
    num_ *= inv;
    den_ *= inv;
    const auto min_exponent = [](const SparsePoly& p, const std::string& name) -> unsigned {
        const auto it = std::lower_bound(p.vars().begin(), p.vars().end(), name);
        if (it == p.vars().end() || *it != name) return 0;
        const auto idx = static_cast<std::size_t>(it - p.vars().begin());
        unsigned mn = ~0u;
        for (const auto& [e, c] : p.terms()) {
            (void)c;
            mn = std::min(mn, e[idx]);
        }
        return mn;
    };
    // copy the names: the loop body reassigns num_, invalidating its vars()
    const std::vector<std::string> names = num_.vars();
    for (const std::string& name : names) {
        const unsigned shift =
            std::min(min_exponent(num_, name), min_exponent(den_, name));
        if (shift == 0) continue;
        const SparsePoly mono = SparsePoly::monomial(Rat(1), {{name, shift}});
        num_ = exact_divide(num_, mono);
        den_ = exact_divide(den_, mono);
    }
    if (sgn(den_.terms().rbegin()->second) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalFunction RationalFunction::operator-() const {
    return RationalFunction(-num_, den_);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

RationalFunction RationalFunction::substitute(const std::map<std::string, SparsePoly>& repl) const {
    return RationalFunction(num_.substitute(repl), den_.substitute(repl));
}

Rat RationalFunction::evaluate(const std::map<std::string, Rat>& point) const {
    const Rat dv = den_.evaluate(point);
    if (dv == 0) throw std::domain_error("denominator vanishes at evaluation point");
    return num_.evaluate(point) / dv;
}

std::string RationalFunction::str() const {
    if (den_.is_constant() && den_.constant_value() == 1) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace symineq
