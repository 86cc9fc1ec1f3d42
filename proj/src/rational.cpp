#include "folsurf/rational.hpp"

namespace folsurf {

std::string rat_to_string(const Rat& r) {
    Int n = rat_num(r);
    Int d = rat_den(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(Int(s));
        }
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw InputError("zero denominator in rational: " + s);
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw InputError("malformed rational: " + s);
    }
}

int rat_sign(const Rat& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

Int gcd_int(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::lcm(a, b);
}

bool is_perfect_square(const Int& n, Int& root) {
    if (n < 0) return false;
    root = boost::multiprecision::sqrt(n);
    return root * root == n;
}

std::pair<Int, Int> squarefree_decompose(Int n) {
    if (n <= 0) throw DomainError("squarefree_decompose needs a positive integer");
    Int r = 1, d = 1;
    for (Int p = 2; p * p <= n && p < 1000000; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) r *= p;
        if (e % 2 == 1) d *= p;
    }
    Int root;
    if (is_perfect_square(n, root)) {
        r *= root;
    } else {
        d *= n;
    }
    return {r, d};
}

bool rat_is_square(const Rat& r, Rat& root) {
    if (r < 0) return false;
    Int rn, rd;
    if (!is_perfect_square(rat_num(r), rn)) return false;
    if (!is_perfect_square(rat_den(r), rd)) return false;
    root = Rat(rn, rd);
    return true;
}

}  // namespace folsurf
