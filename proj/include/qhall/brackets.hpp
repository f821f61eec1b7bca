#pragma once

#include "qhall/category.hpp"

#include <map>
#include <tuple>

namespace qhall {

// Multiplicative Euler forms [A,B] = ∏_{n≥0} |Hom(A, Σ^{-n}B)|^{(-1)^n} and
// {A,B} = [A,B]/|Hom(A,B)|, plus the named structure constants.
//
// Termination: Hom(A,B) = 0 once topIdx(B) < lo(A) - 1, and topIdx(Σ^{-n}B)
// is non-increasing in n, dropping by m every r steps.  The scan asserts
// vanishing for 2r extra steps past the cutoff.
class Brackets {
public:
    explicit Brackets(const Params& p) : p_(p) {}
    const Params& params() const { return p_; }

    long eulerExp(const Indec& A, const Indec& B);    // [A,B] = q^eulerExp
    long eulerExp(const Obj& A, const Obj& B);

    QScalar square(const Obj& A, const Obj& B);       // [A,B]
    QScalar curly(const Obj& A, const Obj& B);        // {A,B}

    // named constants (translation invariant representatives at base index 0)
    QScalar lambda(long i, int k, int l);             // [X_0^{(k)}, X_i^{(l)}]
    QScalar mu(long i, int k, int l);                 // [X_0^{(k)}, Z_i^{(l)}]
    QScalar nu(long i, int k, int l);                 // [Z_0^{(k)}, X_i^{(l)}]
    QScalar kappa(long i, int k, int l);              // [Z_0^{(k)}, Z_i^{(l)}]
    QScalar muPrime(long i, int k);                   // μ'_i at level k
    QScalar nuPrime(long i, int k);                   // ν'_i at level k

private:
    Params p_;
    std::map<std::tuple<int, int, long, int, int, long, long>, long> memo_;
};

// closed form λ_i^{(k,k)} = q^{ε'+ε''}
QScalar lambdaClosedForm(const Params& p, long i);

}  // namespace qhall
