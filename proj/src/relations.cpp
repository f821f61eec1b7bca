#include "qhall/relations.hpp"

#include <sstream>

namespace qhall {

namespace {

FreeElement w(std::initializer_list<Generator> gs, QScalar c = QScalar(1)) {
    return FreeElement::word(Word(gs), c);
}

// Phi_{a,b}^{(k)}: expansion of the interval in generators; the empty range
// degenerates to the constant 1/(q-1), which is what the completed product
// formulas require inside relations.
FreeElement phiX(Engine& eng, int k, long a, long b) {
    if (b == a - 1) return FreeElement::unit().scaled(QScalar(1) / QScalar::qm1());
    return eng.expandInGenerators(xObj(eng.params(), k, a, b));
}

std::string tag(std::initializer_list<std::pair<const char*, long>> kv) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, v] : kv) {
        if (!first) os << ' ';
        first = false;
        os << n << '=' << v;
    }
    return os.str();
}

}  // namespace

std::vector<RelationInstance> relationInstances(Engine& eng, long lo, long hi) {
    const Params& p = eng.params();
    Brackets& br = eng.brackets();
    const QScalar one(1);
    const QScalar q = QScalar::qpow(1);
    std::vector<RelationInstance> out;
    auto add = [&](std::string fam, std::string label, FreeElement el) {
        out.push_back({std::move(fam), std::move(label), std::move(el)});
    };

    for (int k = 1; k <= p.r; ++k) {
        const int kUp = p.levelAdd(k, 1), kDn = p.levelAdd(k, -1);
        const long D = p.topShift(k);
        auto x = [&](long i) { return Generator::x(k, i); };
        auto xu = [&](long i) { return Generator::x(kUp, i); };
        const Generator z = Generator::z(k);

        // (1) commutation of distant x-generators
        for (int l = 1; l <= p.r; ++l)
            for (long i = lo; i <= hi; ++i)
                for (long j = lo; j <= hi; ++j) {
                    if (l == k && (j == i || j == i + 1 || j == i - 1)) continue;
                    if (l == kUp && j == i + D) continue;
                    if (l == kDn && j == i - p.botShift(k)) continue;
                    Generator xl = Generator::x(l, j);
                    add("1", tag({{"k", k}, {"i", i}, {"l", l}, {"j", j}}),
                        w({x(i), xl}, one / br.lambda(j - i, k, l)) -
                            w({xl, x(i)}, one / br.lambda(i - j, l, k)));
                }

        // (1') suspension-adjacent pair, constant tail
        if (!(p.r == 1 && p.m == 1))
            for (long i = lo; i <= hi; ++i) {
                if (i + D < lo || i + D > hi) continue;
                add("1'", tag({{"k", k}, {"i", i}}),
                    w({x(i), xu(i + D)}, one / br.lambda(D, k, kUp)) -
                        w({xu(i + D), x(i)}, one / br.lambda(-D, kUp, k)) -
                        FreeElement::unit().scaled(q / QScalar::qm1()));
            }

        // (2),(3) cubic Serre-type relations for adjacent x-generators
        const QScalar l1 = br.lambda(1, k, k), lm1 = br.lambda(-1, k, k);
        const QScalar drm = (p.r == 1 && p.m == 1) ? one : QScalar(0);
        for (long i = lo; i + 1 <= hi; ++i) {
            add("2", tag({{"k", k}, {"i", i}}),
                w({x(i), x(i), x(i + 1)}, one / (l1 * l1)) -
                    w({x(i), x(i + 1), x(i)}, (q + one) / (l1 * lm1)) +
                    w({x(i + 1), x(i), x(i)}, q / (lm1 * lm1)) -
                    w({x(i)}, drm * q * (q + one)));
            add("3", tag({{"k", k}, {"i", i}}),
                w({x(i), x(i + 1), x(i + 1)}, one / (l1 * l1)) -
                    w({x(i + 1), x(i), x(i + 1)}, (q + one) / (l1 * lm1)) +
                    w({x(i + 1), x(i + 1), x(i)}, q / (lm1 * lm1)) -
                    w({x(i + 1)}, drm * q * (q + one)));
        }

        // (4) commutation of distant z-generators (empty for r <= 3)
        for (int l = 1; l <= p.r; ++l) {
            if (l == k || l == kUp || l == kDn) continue;
            Generator zl = Generator::z(l);
            add("4", tag({{"k", k}, {"l", l}}),
                w({z, zl}, one / br.kappa(0, k, l)) -
                    w({zl, z}, one / br.kappa(0, l, k)));
        }

        // (4') adjacent z-generators
        if (p.r >= 2) {
            Generator zu = Generator::z(kUp);
            FreeElement el = w({z, zu}, one / br.kappa(0, k, kUp)) -
                             w({zu, z}, one / br.kappa(0, kUp, k)) -
                             phiX(eng, kUp, 0, D - 1).scaled(one / br.kappa(0, k, kUp));
            if (p.r == 2)
                el += phiX(eng, k, 0, p.topShift(kUp) - 1)
                          .scaled(one / br.kappa(0, kUp, k));
            add("4'", tag({{"k", k}}), el);
        }

        // (5) x against z
        for (int l = 1; l <= p.r; ++l)
            for (long j = lo; j <= hi; ++j) {
                if ((l == k && j == -1) || (l == kUp && j == D)) continue;
                Generator xl = Generator::x(l, j);
                add("5", tag({{"k", k}, {"l", l}, {"j", j}}),
                    w({xl, z}, one / br.mu(-j, l, k)) -
                        w({z, xl}, one / br.nu(j, k, l)));
            }

        const QScalar mu1 = br.mu(1, k, k), mu0 = br.mu(0, k, k), mum1 = br.mu(-1, k, k);
        const QScalar nu1 = br.nu(1, k, k), nu0 = br.nu(0, k, k), num1 = br.nu(-1, k, k);
        const QScalar ka1 = br.kappa(1, k, k), kam1 = br.kappa(-1, k, k);
        const QScalar mp1 = br.muPrime(1, k), mp0 = br.muPrime(0, k),
                      mpm1 = br.muPrime(-1, k), mpm2 = br.muPrime(-2, k);
        const QScalar np1 = br.nuPrime(1, k), np0 = br.nuPrime(0, k),
                      npm1 = br.nuPrime(-1, k), np2 = br.nuPrime(2, k);
        const QScalar dr1 = (p.r == 1) ? one : QScalar(0);
        const Generator xm1 = x(-1), x0 = x(0), xp = xu(D), xpm = xu(D - 1);

        // (6) x_{-1} z z
        {
            FreeElement el = w({xm1, z, z}, one / (mu1 * ka1)) -
                             w({z, xm1, z}, one / (num1 * ka1) + one / (mu1 * kam1)) +
                             w({z, z, xm1}, one / (num1 * kam1));
            if (p.r == 1)
                el += phiX(eng, k, -1, D - 1).scaled(dr1 / kam1) -
                      phiX(eng, k, 0, D - 2).scaled(dr1 / ka1);
            add("6", tag({{"k", k}}), el);
        }

        // (7) x at the suspension index against z z
        {
            FreeElement el = w({xp, z, z}, one / (mpm1 * kam1)) -
                             w({z, xp, z}, one / (np1 * kam1) + one / (mpm1 * ka1)) +
                             w({z, z, xp}, one / (np1 * ka1));
            if (p.r == 1)
                el += phiX(eng, k, 0, D).scaled(dr1 / kam1) -
                      phiX(eng, k, 1, D - 1).scaled(dr1 / ka1);
            add("7", tag({{"k", k}}), el);
        }

        // (8)-(12) straightening of z past the short x-words
        add("8", tag({{"k", k}}),
            w({xm1, xm1, z}, one / (mu0 * mu1)) -
                w({xm1, z, xm1}, one / (mu0 * num1) + one / (mu1 * nu0)) +
                w({z, xm1, xm1}, one / (num1 * nu0)));
        // (9), (11): at (r,m) = (1,1) every pair of the involved letters is
        // exceptional at once and the straightening leaves a residue -[Z_0],
        // so the instances need a +z tail to stay in the kernel of xi
        add("9", tag({{"k", k}}),
            w({x0, xm1, z}, one / (mum1 * mu1)) -
                w({x0, z, xm1}, one / (mum1 * num1)) -
                w({xm1, z, x0}, one / (mu1 * nu1)) +
                w({z, xm1, x0}, one / (num1 * nu1)) + w({z}, drm));
        add("10", tag({{"k", k}}),
            w({xp, xm1, z}, one / (mpm2 * mu1)) -
                w({xp, z, xm1}, one / (mpm2 * num1)) -
                w({xm1, z, xp}, one / (mu1 * np2)) +
                w({z, xm1, xp}, one / (num1 * np2)));
        add("11", tag({{"k", k}}),
            w({xpm, xp, z}, one / (mpm1 * mp1)) -
                w({xpm, z, xp}, one / (mp1 * np1)) -
                w({xp, z, xpm}, one / (mpm1 * npm1)) +
                w({z, xp, xpm}, one / (npm1 * np1)) + w({z}, drm));
        add("12", tag({{"k", k}}),
            w({xp, xp, z}, one / (mpm1 * mp0)) -
                w({xp, z, xp}, one / (mp0 * np1) + one / (mpm1 * np0)) +
                w({z, xp, xp}, one / (np0 * np1)));
    }
    return out;
}

}  // namespace qhall
