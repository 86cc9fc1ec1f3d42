#include "folsurf/germ.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

namespace folsurf {

namespace {

// Normalize the graded-lex leading coefficient to 1 so saturation is
// deterministic.
Poly monic_grlex(const Poly& p) {
    if (p.is_zero()) return p;
    auto key = [](const Poly::Exp& e) { return std::make_tuple(e.first + e.second, e.first); };
    auto best = p.terms().begin();
    for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
        if (key(it->first) > key(best->first)) best = it;
    return p * (Rat(1) / best->second);
}

}  // namespace

PlaneGerm::PlaneGerm(Poly f, Poly g) : f_(std::move(f)), g_(std::move(g)) {
    if (f_.is_zero() && g_.is_zero())
        throw InputError("zero vector field: both components vanish identically");
    Poly c = monic_grlex(Poly::gcd(f_, g_));
    if (!c.is_constant()) {
        f_ = *f_.divide_exact(c);
        g_ = *g_.divide_exact(c);
    }
}

bool PlaneGerm::is_singular_at_origin() const {
    return f_.coeff(0, 0) == 0 && g_.coeff(0, 0) == 0;
}

bool PlaneGerm::vanishes_at(const Rat& x0, const Rat& y0) const {
    return f_.eval(x0, y0) == 0 && g_.eval(x0, y0) == 0;
}

std::array<Rat, 4> PlaneGerm::linear_part() const {
    return {f_.coeff(1, 0), f_.coeff(0, 1), g_.coeff(1, 0), g_.coeff(0, 1)};
}

PlaneGerm PlaneGerm::translated(const Rat& x0, const Rat& y0) const {
    return PlaneGerm(f_.translate(x0, y0), g_.translate(x0, y0));
}

PlaneGerm PlaneGerm::swapped() const { return PlaneGerm(g_.swap_xy(), f_.swap_xy()); }

// ---------------------------------------------------------------------------
// Parser. Expressions are sums of products; each product combines scalar
// factors (numbers, x/y/t powers) with at most one vector factor (dx, dy, or
// a parenthesized vector sub-expression).

namespace {

struct Token {
    enum Kind { Num, Var, Dx, Dy, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    Int value;   // Num
    char var;    // Var: 'x', 'y', 't'
    std::size_t pos;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t pos = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Num, Int(s.substr(i, j - i)), 0, pos});
            i = j;
            continue;
        }
        if (c == 'd' && i + 1 < s.size() && (s[i + 1] == 'x' || s[i + 1] == 'y')) {
            out.push_back({s[i + 1] == 'x' ? Token::Dx : Token::Dy, 0, 0, pos});
            i += 2;
            continue;
        }
        if (c == 'x' || c == 'y' || c == 't') {
            out.push_back({Token::Var, 0, c, pos});
            ++i;
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '+': k = Token::Plus; break;
            case '-': k = Token::Minus; break;
            case '*': k = Token::Star; break;
            case '/': k = Token::Slash; break;
            case '^': k = Token::Caret; break;
            case '(': k = Token::LParen; break;
            case ')': k = Token::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", pos);
        }
        out.push_back({k, 0, 0, pos});
        ++i;
    }
    out.push_back({Token::End, 0, 0, s.size()});
    return out;
}

// Monomial exponents (x, y, t) -> coefficient.
using TMap = std::map<std::tuple<int, int, int>, Rat>;

struct VecVal {
    TMap f, g;  // dx and dy components
};

// An expression evaluates to a scalar polynomial or a vector field.
struct Val {
    bool is_vector = false;
    TMap scalar;
    VecVal vec;
};

TMap tmap_const(const Rat& c) {
    TMap m;
    if (c != 0) m[{0, 0, 0}] = c;
    return m;
}

void tmap_add(TMap& a, const TMap& b) {
    for (const auto& [e, c] : b) {
        auto it = a.find(e);
        if (it == a.end()) {
            a[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) a.erase(it);
        }
    }
}

TMap tmap_mul(const TMap& a, const TMap& b) {
    TMap out;
    for (const auto& [e1, c1] : a)
        for (const auto& [e2, c2] : b) {
            auto e = std::make_tuple(std::get<0>(e1) + std::get<0>(e2),
                                     std::get<1>(e1) + std::get<1>(e2),
                                     std::get<2>(e1) + std::get<2>(e2));
            auto it = out.find(e);
            if (it == out.end()) {
                out[e] = c1 * c2;
                if (out[e] == 0) out.erase(e);
            } else {
                it->second += c1 * c2;
                if (it->second == 0) out.erase(it);
            }
        }
    return out;
}

TMap tmap_neg(const TMap& a) {
    TMap out;
    for (const auto& [e, c] : a) out[e] = -c;
    return out;
}

class Parser {
public:
    Parser(const std::string& text, bool allow_t)
        : toks_(lex(text)), allow_t_(allow_t) {}

    VecVal parse() {
        std::size_t start = peek().pos;
        Val v = expr();
        expect(Token::End, "end of input");
        if (!v.is_vector) throw ParseError("expression has no dx or dy component", start);
        return v.vec;
    }

private:
    std::vector<Token> toks_;
    std::size_t i_ = 0;
    bool allow_t_;

    const Token& peek() const { return toks_[i_]; }
    Token next() { return toks_[i_++]; }
    void expect(Token::Kind k, const std::string& what) {
        if (peek().kind != k) throw ParseError("expected " + what, peek().pos);
        ++i_;
    }

    Val expr() {
        Val acc;
        bool first = true;
        while (true) {
            std::size_t pos = peek().pos;
            int sign = 1;
            if (peek().kind == Token::Plus) {
                next();
            } else if (peek().kind == Token::Minus) {
                next();
                sign = -1;
            } else if (!first) {
                break;
            }
            Val term = product();
            if (sign < 0) {
                term.scalar = tmap_neg(term.scalar);
                term.vec.f = tmap_neg(term.vec.f);
                term.vec.g = tmap_neg(term.vec.g);
            }
            if (first) {
                acc = std::move(term);
            } else {
                if (acc.is_vector != term.is_vector)
                    throw ParseError("cannot add scalar and vector terms", pos);
                tmap_add(acc.scalar, term.scalar);
                tmap_add(acc.vec.f, term.vec.f);
                tmap_add(acc.vec.g, term.vec.g);
            }
            first = false;
        }
        return acc;
    }

    // A product of factors; '*' optional between adjacent factors.
    Val product() {
        TMap scalar = tmap_const(Rat(1));
        std::optional<VecVal> vec;
        bool any = false;
        while (true) {
            Token::Kind k = peek().kind;
            if (k == Token::Star) {
                next();
                continue;
            }
            if (k != Token::Num && k != Token::Var && k != Token::Dx && k != Token::Dy &&
                k != Token::LParen)
                break;
            std::size_t pos = peek().pos;
            if (k == Token::Dx || k == Token::Dy) {
                next();
                if (vec) throw ParseError("product of two vector expressions", pos);
                VecVal unit;
                (k == Token::Dx ? unit.f : unit.g) = tmap_const(Rat(1));
                vec = unit;
            } else if (k == Token::LParen) {
                next();
                Val inner = expr();
                expect(Token::RParen, "')'");
                if (inner.is_vector) {
                    if (vec) throw ParseError("product of two vector expressions", pos);
                    vec = inner.vec;
                } else {
                    scalar = tmap_mul(scalar, inner.scalar);
                }
            } else {
                scalar = tmap_mul(scalar, scalar_factor());
            }
            any = true;
        }
        if (!any) throw ParseError("expected a term", peek().pos);
        Val out;
        if (vec) {
            out.is_vector = true;
            out.vec.f = tmap_mul(scalar, vec->f);
            out.vec.g = tmap_mul(scalar, vec->g);
        } else {
            out.scalar = std::move(scalar);
        }
        return out;
    }

    TMap scalar_factor() {
        const Token& t = peek();
        if (t.kind == Token::Num) {
            Int num = next().value;
            if (peek().kind == Token::Slash) {
                next();
                if (peek().kind != Token::Num) throw ParseError("expected denominator", peek().pos);
                Int den = next().value;
                if (den == 0) throw ParseError("zero denominator", t.pos);
                return tmap_const(Rat(num, den));
            }
            return tmap_const(Rat(num));
        }
        if (t.kind == Token::Var) {
            char v = next().var;
            if (v == 't' && !allow_t_)
                throw ParseError("parameter 't' not allowed in a plain germ", t.pos);
            int e = 1;
            if (peek().kind == Token::Caret) {
                next();
                if (peek().kind != Token::Num) throw ParseError("expected exponent", peek().pos);
                Int ev = next().value;
                if (ev > 1000) throw ParseError("exponent too large", t.pos);
                e = static_cast<int>(ev);
            }
            TMap m;
            m[{v == 'x' ? e : 0, v == 'y' ? e : 0, v == 't' ? e : 0}] = Rat(1);
            return m;
        }
        throw ParseError("expected a factor", t.pos);
    }
};

Poly tmap_to_poly(const TMap& m) {
    Poly p;
    for (const auto& [e, c] : m) {
        // t exponents must be zero here; callers check via allow_t
        p = p + Poly::monomial(std::get<0>(e), std::get<1>(e), c);
    }
    return p;
}

std::map<ParamGerm::Exp, RatFun> tmap_to_param(const TMap& m) {
    std::map<ParamGerm::Exp, std::vector<Rat>> coeffs;
    for (const auto& [e, c] : m) {
        auto& v = coeffs[{std::get<0>(e), std::get<1>(e)}];
        int k = std::get<2>(e);
        if (static_cast<int>(v.size()) <= k) v.resize(k + 1, Rat(0));
        v[k] = c;
    }
    std::map<ParamGerm::Exp, RatFun> out;
    for (auto& [e, v] : coeffs) out.emplace(e, RatFun(UPoly(std::move(v)), UPoly(Rat(1))));
    return out;
}

std::string print_component(const Poly& p, const char* form, bool& leading) {
    if (p.is_zero()) return "";
    std::vector<std::pair<Poly::Exp, Rat>> sorted(p.terms().begin(), p.terms().end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
        if (ta != tb) return ta > tb;
        return a.first.first > b.first.first;
    });
    std::string out;
    for (const auto& [e, c] : sorted) {
        if (leading) {
            if (c < 0) out += "-";
            leading = false;
        } else {
            out += (c > 0 ? " + " : " - ");
        }
        Rat ac = c > 0 ? c : Rat(-c);
        std::string term;
        if (ac != 1) term = rat_to_string(ac);
        auto var = [&term](const char* v, int k) {
            if (k == 0) return;
            if (!term.empty()) term += "*";
            term += v;
            if (k > 1) term += "^" + std::to_string(k);
        };
        var("x", e.first);
        var("y", e.second);
        if (!term.empty()) term += "*";
        term += form;
        out += term;
    }
    return out;
}

}  // namespace

std::string PlaneGerm::to_string() const {
    bool leading = true;
    std::string out = print_component(f_, "dx", leading);
    out += print_component(g_, "dy", leading);
    return out;
}

PlaneGerm PlaneGerm::parse(const std::string& text) {
    VecVal v = Parser(text, /*allow_t=*/false).parse();
    return PlaneGerm(tmap_to_poly(v.f), tmap_to_poly(v.g));
}

// ---------------------------------------------------------------------------
// Classification.

std::string germ_kind_name(GermKind k) {
    switch (k) {
        case GermKind::NonSingular: return "non_singular";
        case GermKind::NonDegenerate: return "non_degenerate";
        case GermKind::SaddleNode: return "saddle_node";
        case GermKind::NilpotentOrDegenerate: return "nilpotent_or_degenerate";
    }
    return "?";
}

std::string SingularityClass::to_string() const {
    std::string out = germ_kind_name(kind);
    if (lambda) out += " lambda=" + lambda->to_string();
    if (!eigen_real) out += " (complex pair)";
    if (reduced)
        out += " reduced";
    else if (semi_reduced)
        out += " semi-reduced";
    return out;
}

namespace {

// Canonical representative of {lambda, 1/lambda}: |value| <= 1, ties positive.
Scalar canonical_ratio(const Scalar& lam) {
    if (lam.is_zero()) return lam;
    Scalar inv = lam.reciprocal();
    if (lam.is_rational()) {
        const Rat& r = lam.as_rational();
        Int an = rat_num(r) < 0 ? Int(-rat_num(r)) : rat_num(r);
        if (an > rat_den(r)) return inv;
        return lam;  // includes +-1, which are self-reciprocal
    }
    Scalar sq = lam * lam - Scalar(Rat(1));
    return sq.sign() > 0 ? inv : lam;
}

}  // namespace

SingularityClass classify_at_origin(const PlaneGerm& v) {
    SingularityClass out;
    if (!v.is_singular_at_origin()) {
        out.kind = GermKind::NonSingular;
        return out;
    }
    auto [a, b, c, d] = v.linear_part();
    out.trace = a + d;
    out.det = a * d - b * c;
    Rat disc = out.trace * out.trace - 4 * out.det;
    if (out.det == 0 && out.trace == 0) {
        out.kind = GermKind::NilpotentOrDegenerate;
        return out;
    }
    if (out.det == 0) {
        // eigenvalues {trace, 0}
        out.kind = GermKind::SaddleNode;
        out.semi_reduced = true;
        out.reduced = true;
        out.lambda = Scalar(Rat(0));
        return out;
    }
    out.kind = GermKind::NonDegenerate;
    out.semi_reduced = true;
    if (disc < 0) {
        // complex-conjugate pair: ratio on the unit circle, rational only
        // when trace = 0 (ratio -1); never in Q+, hence reduced
        out.eigen_real = false;
        out.reduced = true;
        if (out.trace == 0) out.lambda = Scalar(Rat(-1));
        return out;
    }
    Rat root;
    if (rat_is_square(disc, root)) {
        Rat mu1 = (out.trace + root) / 2, mu2 = (out.trace - root) / 2;
        Rat lam = mu1 / mu2;
        out.lambda = canonical_ratio(Scalar(lam));
        out.reduced = !(lam > 0);
    } else {
        Scalar r = Scalar::sqrt_of(disc);
        Scalar mu1 = (Scalar(out.trace) + r) / Scalar(Rat(2));
        Scalar mu2 = (Scalar(out.trace) - r) / Scalar(Rat(2));
        out.lambda = canonical_ratio(mu1 / mu2);
        out.reduced = true;  // irrational ratio is never in Q+
    }
    return out;
}

std::vector<SingularPoint> singular_points_rational(const PlaneGerm& v, int degree_cap) {
    if (v.f().total_degree() > degree_cap || v.g().total_degree() > degree_cap)
        throw DomainError("degree cap exceeded in singular point search");
    std::vector<SingularPoint> out;
    std::vector<Rat> xs;
    if (v.f().deg_y() <= 0 && v.g().deg_y() <= 0) {
        // both components depend on x alone; a common root would contradict
        // saturation, but intersect the root sets anyway
        for (const auto& r : v.f().restrict_y0().rational_roots())
            if (v.g().restrict_y0().eval(r) == 0) xs.push_back(r);
        for (const auto& x0 : xs) out.push_back({x0, Rat(0), classify_at_origin(v.translated(x0, Rat(0)))});
        return out;
    }
    UPoly rx = resultant_y(v.f(), v.g());
    if (rx.is_zero())
        throw DomainError("degenerate resultant: components share a factor");
    for (const auto& x0 : rx.rational_roots()) {
        // common zeros above x = x0
        PlaneGerm w = v.translated(x0, Rat(0));
        UPoly fy = w.f().restrict_x0();
        UPoly gy = w.g().restrict_x0();
        UPoly h = fy.is_zero() ? gy : (gy.is_zero() ? fy : UPoly::gcd(fy, gy));
        for (const auto& y0 : h.rational_roots())
            if (v.vanishes_at(x0, y0))
                out.push_back({x0, y0, classify_at_origin(v.translated(x0, y0))});
    }
    std::sort(out.begin(), out.end(), [](const SingularPoint& a, const SingularPoint& b) {
        return std::tie(a.x, a.y) < std::tie(b.x, b.y);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Parameter families.

ParamGerm::ParamGerm(std::map<Exp, RatFun> f, std::map<Exp, RatFun> g)
    : f_(std::move(f)), g_(std::move(g)) {}

RatFun ParamGerm::f_coeff(int i, int j) const {
    auto it = f_.find({i, j});
    return it == f_.end() ? RatFun(Rat(0)) : it->second;
}

RatFun ParamGerm::g_coeff(int i, int j) const {
    auto it = g_.find({i, j});
    return it == g_.end() ? RatFun(Rat(0)) : it->second;
}

PlaneGerm ParamGerm::at(const Rat& t) const {
    Poly f, g;
    for (const auto& [e, c] : f_) {
        if (c.den().eval(t) == 0) throw DomainError("family denominator vanishes at t");
        f = f + Poly::monomial(e.first, e.second, c.num().eval(t) / c.den().eval(t));
    }
    for (const auto& [e, c] : g_) {
        if (c.den().eval(t) == 0) throw DomainError("family denominator vanishes at t");
        g = g + Poly::monomial(e.first, e.second, c.num().eval(t) / c.den().eval(t));
    }
    return PlaneGerm(std::move(f), std::move(g));
}

ParamGerm ParamGerm::parse(const std::string& text) {
    VecVal v = Parser(text, /*allow_t=*/true).parse();
    if (v.f.empty() && v.g.empty())
        throw InputError("zero vector field: both components vanish identically");
    return ParamGerm(tmap_to_param(v.f), tmap_to_param(v.g));
}

RatFun eigenvalue_function(const ParamGerm& v) {
    RatFun a = v.f_coeff(1, 0), b = v.f_coeff(0, 1);
    RatFun c = v.g_coeff(1, 0), d = v.g_coeff(0, 1);
    RatFun tr = a + d;
    RatFun det = a * d - b * c;
    if (det.is_zero()) throw DomainError("identically degenerate family: det of linear part is 0");
    return tr * tr / det;
}

std::vector<Rat> solve_lambda(const ParamGerm& v, const Rat& lambda0) {
    if (lambda0 == 0) throw DomainError("solve_lambda needs a nonzero target eigenvalue");
    RatFun s = eigenvalue_function(v);
    Rat target = lambda0 + 1 / lambda0 + 2;
    UPoly p = s.num() - s.den() * target;
    std::vector<Rat> roots = p.rational_roots();
    std::vector<Rat> out;
    for (const auto& t : roots)
        if (s.den().eval(t) != 0) out.push_back(t);
    return out;
}

}  // namespace folsurf
