#pragma once

// Finite symbolic algebra of creation/annihilation generators and
// one-particle states, and the discrete-symmetry maps acting on them: the
// space-inversion U^s, the two charge-conjugation choices U^c and Vt^c, and
// the antiunitary V^T.  All coefficients are exact eighth roots of unity, so
// commutation/eigenvalue statements are checked with zero tolerance.

#include "spinorlab/algebra.hpp"
#include "spinorlab/report.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spinorlab {
namespace fock {

// zero or e^{i k pi / 4}
class Phase8 {
public:
    Phase8() : zero_(true), k_(0) {}
    static Phase8 zero() { return Phase8(); }
    static Phase8 root(int k);
    static Phase8 one() { return root(0); }
    static Phase8 i() { return root(2); }
    static Phase8 minusOne() { return root(4); }
    static Phase8 minusI() { return root(6); }

    bool isZero() const { return zero_; }
    int exponent() const { return k_; }   // valid when nonzero

    Phase8 operator*(const Phase8& o) const;
    Phase8 operator-() const;
    Phase8 conj() const;
    Phase8 inverse() const;
    std::optional<Phase8> sqrt() const;   // exists when the exponent is even
    bool operator==(const Phase8& o) const { return zero_ == o.zero_ && (zero_ || k_ == o.k_); }
    bool operator!=(const Phase8& o) const { return !(*this == o); }

    Complex toComplex() const;
    std::string str() const;

private:
    explicit Phase8(int k) : zero_(false), k_(((k % 8) + 8) % 8) {}
    bool zero_;
    int k_;
};

enum class Species { a, b };

struct Generator {
    Species species;
    bool daggered;
    Eta eta;
    int momentum;   // symbolic tag, negation = reflected 3-momentum

    bool operator==(const Generator&) const = default;
    auto operator<=>(const Generator&) const = default;
    std::string str() const;
};

// one-particle basis ket |momentum, eta>^{+-}; + is a-type, - is b-type
struct StateKey {
    int charge;     // +1 particle, -1 antiparticle
    Eta eta;
    int momentum;

    bool operator==(const StateKey&) const = default;
    auto operator<=>(const StateKey&) const = default;
    std::string str() const;
    Generator creationOp() const;
};

// finite formal sum of kets with exact coefficients
class FockStateVector {
public:
    FockStateVector() = default;
    static FockStateVector ket(const StateKey& k, Phase8 c = Phase8::one());

    FockStateVector& addTerm(const StateKey& k, Phase8 c);
    const std::map<StateKey, Phase8>& terms() const { return terms_; }
    bool operator==(const FockStateVector& o) const { return terms_ == o.terms_; }
    FockStateVector scaled(Phase8 c) const;
    std::string str() const;

private:
    std::map<StateKey, Phase8> terms_;
};

struct SymmetryMap {
    std::string name;
    bool antiunitary = false;
    std::function<std::pair<Phase8, Generator>(const Generator&)> generatorAction;

    std::pair<Phase8, Generator> apply(const Generator& g) const;
    FockStateVector apply(const FockStateVector& s) const;
    SymmetryMap inverse(const std::vector<Generator>& domain) const;
};

// the paper's operator tables, completed on daggered partners by
// (anti)unitarity; the final space-inversion line is printed without a
// dagger and is implemented daggered (the map must be a bijection)
SymmetryMap spaceInversion();        // U^s
SymmetryMap chargeConjugation();     // U^c
SymmetryMap chargeConjugationAlt();  // Vt^c
SymmetryMap timeReversal();          // V^T, antiunitary

// every generator over the given momentum tags
std::vector<Generator> generatorSet(const std::vector<int>& momenta = {+1, -1});
std::vector<StateKey> stateBasis(const std::vector<int>& momenta = {+1, -1});

enum class ComposeRelation { commute, anticommute, neither };
ComposeRelation composeCheck(const SymmetryMap& m1, const SymmetryMap& m2,
                             const std::vector<StateKey>& basis);
VerificationReport composeReport(const FourMomentum& p);

struct CEigenstate {
    FockStateVector state;
    Phase8 eigenvalue;
};
// the two charge-conjugation eigenstates |p,up>^+ +- i |p,up>^- at a momentum
// tag, plus the exhaustive 1- and 2-term search showing no state is
// simultaneously a U^c and a U^s eigenstate
std::vector<CEigenstate> cEigenstates(int momentumTag = +1);
VerificationReport simultaneousEigenstateSearch();

struct BracketResult {
    bool nonzero;
    std::string token;   // normalization token when nonzero
};
// [g1, g2]_{+-}: nonzero only for (a, a-dagger) / (b, b-dagger) pairs with
// matching momentum tag and opposite eta
BracketResult bracket(const Generator& g1, const Generator& g2);

// S(T) = diag(Theta, Theta); unitary, S conj(S) = -1
MatrixC timeReversalSpinMatrix();

}  // namespace fock
}  // namespace spinorlab
