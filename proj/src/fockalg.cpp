#include "spinorlab/fockalg.hpp"

#include <cmath>
#include <sstream>

namespace spinorlab {
namespace fock {

namespace {
Eta flip(Eta e) { return e == Eta::up ? Eta::down : Eta::up; }
}

Phase8 Phase8::root(int k) { return Phase8(k); }

Phase8 Phase8::operator*(const Phase8& o) const {
    if (zero_ || o.zero_) return Phase8();
    return Phase8(k_ + o.k_);
}

Phase8 Phase8::operator-() const { return zero_ ? Phase8() : Phase8(k_ + 4); }

Phase8 Phase8::conj() const { return zero_ ? Phase8() : Phase8(-k_); }

Phase8 Phase8::inverse() const {
    if (zero_) throw std::domain_error("Phase8: zero has no inverse");
    return Phase8(-k_);
}

std::optional<Phase8> Phase8::sqrt() const {
    if (zero_) return Phase8();
    if (k_ % 2 != 0) return std::nullopt;
    return Phase8(k_ / 2);
}

Complex Phase8::toComplex() const {
    if (zero_) return {0.0, 0.0};
    const double a = k_ * M_PI / 4.0;
    return {std::cos(a), std::sin(a)};
}

std::string Phase8::str() const {
    if (zero_) return "0";
    static const char* names[8] = {"+1", "+e^{i pi/4}", "+i", "+e^{3i pi/4}",
                                   "-1", "-e^{i pi/4}", "-i", "-e^{3i pi/4}"};
    return names[k_];
}

std::string Generator::str() const {
    std::ostringstream os;
    os << (species == Species::a ? "a" : "b") << (daggered ? "+" : "") << "_"
       << (eta == Eta::up ? "up" : "dn") << "(" << (momentum > 0 ? "p" : "-p") << ")";
    return os.str();
}

std::string StateKey::str() const {
    std::ostringstream os;
    os << "|" << (momentum > 0 ? "p" : "-p") << "," << (eta == Eta::up ? "up" : "dn") << ">"
       << (charge > 0 ? "+" : "-");
    return os.str();
}

Generator StateKey::creationOp() const {
    return {charge > 0 ? Species::a : Species::b, true, eta, momentum};
}

FockStateVector FockStateVector::ket(const StateKey& k, Phase8 c) {
    FockStateVector v;
    v.addTerm(k, c);
    return v;
}

FockStateVector& FockStateVector::addTerm(const StateKey& k, Phase8 c) {
    if (!c.isZero()) terms_[k] = c;
    return *this;
}

FockStateVector FockStateVector::scaled(Phase8 c) const {
    FockStateVector out;
    for (const auto& [k, v] : terms_) out.addTerm(k, v * c);
    return out;
}

std::string FockStateVector::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        if (!first) os << " ";
        os << v.str() << " " << k.str();
        first = false;
    }
    return first ? "0" : os.str();
}

std::pair<Phase8, Generator> SymmetryMap::apply(const Generator& g) const {
    return generatorAction(g);
}

FockStateVector SymmetryMap::apply(const FockStateVector& s) const {
    FockStateVector out;
    for (const auto& [key, coef] : s.terms()) {
        const auto [phase, gen] = generatorAction(key.creationOp());
        if (!gen.daggered)
            throw std::logic_error("SymmetryMap: creation operator mapped to annihilator");
        const StateKey mapped{gen.species == Species::a ? +1 : -1, gen.eta, gen.momentum};
        const Phase8 c = antiunitary ? coef.conj() : coef;
        out.addTerm(mapped, c * phase);
    }
    return out;
}

SymmetryMap SymmetryMap::inverse(const std::vector<Generator>& domain) const {
    std::map<Generator, std::pair<Phase8, Generator>> table;
    for (const auto& g : domain) {
        const auto [phase, target] = generatorAction(g);
        // unitary: coefficient phi^-1; antiunitary: phi (conjugated on application)
        table[target] = {antiunitary ? phase : phase.inverse(), g};
    }
    SymmetryMap inv;
    inv.name = name + "^-1";
    inv.antiunitary = antiunitary;
    inv.generatorAction = [table](const Generator& g) {
        const auto it = table.find(g);
        if (it == table.end()) throw std::out_of_range("SymmetryMap inverse: unknown generator");
        return it->second;
    };
    return inv;
}

SymmetryMap spaceInversion() {
    SymmetryMap m;
    m.name = "U^s";
    m.generatorAction = [](const Generator& g) -> std::pair<Phase8, Generator> {
        Generator t{g.species, g.daggered, flip(g.eta), -g.momentum};
        // a_up -> -i a_dn(-p), a_dn -> +i a_up(-p); daggered partners
        // conjugate, and the b sector follows the same pattern
        Phase8 ph = (g.eta == Eta::up) ? Phase8::minusI() : Phase8::i();
        if (g.daggered) ph = ph.conj();
        return {ph, t};
    };
    return m;
}

SymmetryMap chargeConjugation() {
    SymmetryMap m;
    m.name = "U^c";
    m.generatorAction = [](const Generator& g) -> std::pair<Phase8, Generator> {
        Generator t{g.species == Species::a ? Species::b : Species::a, g.daggered, g.eta,
                    g.momentum};
        // a -> +b; b -> -a (either dagger)
        const Phase8 ph = g.species == Species::a ? Phase8::one() : Phase8::minusOne();
        return {ph, t};
    };
    return m;
}

SymmetryMap chargeConjugationAlt() {
    SymmetryMap m;
    m.name = "Vt^c";
    m.generatorAction = [](const Generator& g) -> std::pair<Phase8, Generator> {
        Generator t{g.species == Species::a ? Species::b : Species::a, g.daggered,
                    flip(g.eta), g.momentum};
        // a_eta -> -b_{-eta}; b_eta -> +a_{-eta}
        const Phase8 ph = g.species == Species::a ? Phase8::minusOne() : Phase8::one();
        return {ph, t};
    };
    return m;
}

SymmetryMap timeReversal() {
    SymmetryMap m;
    m.name = "V^T";
    m.antiunitary = true;
    m.generatorAction = [](const Generator& g) -> std::pair<Phase8, Generator> {
        Generator t{g.species, g.daggered, flip(g.eta), -g.momentum};
        // a+_up -> a+_dn(-p), a+_dn -> -a+_up(-p); same pattern in each sector
        const Phase8 ph = g.eta == Eta::up ? Phase8::one() : Phase8::minusOne();
        return {ph, t};
    };
    return m;
}

std::vector<Generator> generatorSet(const std::vector<int>& momenta) {
    std::vector<Generator> out;
    for (Species s : {Species::a, Species::b})
        for (bool d : {false, true})
            for (Eta e : {Eta::up, Eta::down})
                for (int mom : momenta) out.push_back({s, d, e, mom});
    return out;
}

std::vector<StateKey> stateBasis(const std::vector<int>& momenta) {
    std::vector<StateKey> out;
    for (int c : {+1, -1})
        for (Eta e : {Eta::up, Eta::down})
            for (int mom : momenta) out.push_back({c, e, mom});
    return out;
}

namespace {

// single-term comparison helper: returns the ratio x/y when both are
// one-term states over the same ket, nullopt otherwise
std::optional<Phase8> ratioOf(const FockStateVector& x, const FockStateVector& y) {
    if (x.terms().size() != 1 || y.terms().size() != 1) return std::nullopt;
    const auto& [kx, cx] = *x.terms().begin();
    const auto& [ky, cy] = *y.terms().begin();
    if (!(kx == ky)) return std::nullopt;
    return cx * cy.inverse();
}

}  // namespace

ComposeRelation composeCheck(const SymmetryMap& m1, const SymmetryMap& m2,
                             const std::vector<StateKey>& basis) {
    bool allSame = true, allOpposite = true;
    for (const auto& key : basis) {
        const FockStateVector s = FockStateVector::ket(key);
        const FockStateVector x = m1.apply(m2.apply(s));
        const FockStateVector y = m2.apply(m1.apply(s));
        const auto ratio = ratioOf(x, y);
        if (!ratio) return ComposeRelation::neither;
        if (*ratio != Phase8::one()) allSame = false;
        if (*ratio != Phase8::minusOne()) allOpposite = false;
    }
    if (allSame) return ComposeRelation::commute;
    if (allOpposite) return ComposeRelation::anticommute;
    return ComposeRelation::neither;
}

VerificationReport composeReport(const FourMomentum&) {
    VerificationReport r;
    r.suite = "fock/compose";
    const auto basis = stateBasis();
    const auto us = spaceInversion();
    const auto uc = chargeConjugation();
    const auto vtc = chargeConjugationAlt();
    r.addExact("fock/commute-Uc-Us", "U^c and U^s commute on every basis state",
               composeCheck(uc, us, basis) == ComposeRelation::commute);
    r.addExact("fock/anticommute-Vtc-Us", "Vt^c and U^s anticommute on every basis state",
               composeCheck(vtc, us, basis) == ComposeRelation::anticommute);
    r.addExact("fock/commute-Us-Us", "U^s commutes with itself",
               composeCheck(us, us, basis) == ComposeRelation::commute);
    return r;
}

std::vector<CEigenstate> cEigenstates(int momentumTag) {
    const auto uc = chargeConjugation();
    std::vector<CEigenstate> out;
    for (Phase8 z : {Phase8::i(), Phase8::minusI()}) {
        FockStateVector v = FockStateVector::ket({+1, Eta::up, momentumTag});
        v.addTerm({-1, Eta::up, momentumTag}, z);
        const FockStateVector img = uc.apply(v);
        // img must be proportional to v; extract the eigenvalue from any term
        const auto& [key, coef] = *v.terms().begin();
        const auto it = img.terms().find(key);
        if (it == img.terms().end())
            throw std::logic_error("cEigenstates: combination is not an eigenstate");
        const Phase8 lambda = it->second * coef.inverse();
        if (!(img == v.scaled(lambda)))
            throw std::logic_error("cEigenstates: combination is not an eigenstate");
        out.push_back({v, lambda});
    }
    return out;
}

namespace {

// all exact eigen-pairs (z, lambda) of a map on span{s1 + z s2}; z = nullopt
// encodes "any coefficient works" (both kets fixed with equal phases)
struct EigenFamily {
    bool anyZ = false;
    std::vector<std::pair<Phase8, Phase8>> solutions;   // (z, lambda)
};

std::optional<EigenFamily> twoTermEigen(const SymmetryMap& m, const StateKey& s1,
                                        const StateKey& s2) {
    const auto [ph1, g1] = m.apply(s1.creationOp());
    const auto [ph2, g2] = m.apply(s2.creationOp());
    const StateKey t1{g1.species == Species::a ? +1 : -1, g1.eta, g1.momentum};
    const StateKey t2{g2.species == Species::a ? +1 : -1, g2.eta, g2.momentum};
    EigenFamily fam;
    if (t1 == s1 && t2 == s2) {
        if (ph1 != ph2) return std::nullopt;
        fam.anyZ = true;
        fam.solutions.push_back({Phase8::one(), ph1});
        return fam;
    }
    if (t1 == s2 && t2 == s1) {
        // m(s1 + z s2) = ph1 s2 + z ph2 s1 (unitary case): z^2 = ph1/ph2
        const auto zroot = (ph1 * ph2.inverse()).sqrt();
        if (!zroot) return std::nullopt;
        for (Phase8 z : {*zroot, -*zroot}) fam.solutions.push_back({z, z * ph2});
        return fam;
    }
    return std::nullopt;
}

// quotient basis for the space-inversion eigen problem: the momentum tag is
// identified under p -> -p, so U^s acts as an eta flip with its phase
SymmetryMap spaceInversionQuotient() {
    SymmetryMap m = spaceInversion();
    auto base = m.generatorAction;
    m.name = "U^s (momentum quotient)";
    m.generatorAction = [base](const Generator& g) {
        auto [ph, t] = base(g);
        t.momentum = g.momentum;
        return std::make_pair(ph, t);
    };
    return m;
}

}  // namespace

VerificationReport simultaneousEigenstateSearch() {
    VerificationReport r;
    r.suite = "fock/eigenstates";
    const auto uc = chargeConjugation();
    const auto usq = spaceInversionQuotient();
    const auto basis = stateBasis({+1});

    // printed eigenstates first
    const auto printed = cEigenstates(+1);
    r.addExact("fock/c-eigenvalue-plus", "U^c (|p,up>+ + i |p,up>-) = -i (...)",
               printed[0].eigenvalue == Phase8::minusI(),
               "state " + printed[0].state.str());
    r.addExact("fock/c-eigenvalue-minus", "U^c (|p,up>+ - i |p,up>-) = +i (...)",
               printed[1].eigenvalue == Phase8::i(),
               "state " + printed[1].state.str());

    // parity eigenstates exist and have eigenvalues +-1
    bool parityPairSeen = false;
    // exhaustive 1- and 2-term search for simultaneous eigenstates
    int simultaneous = 0;
    for (size_t i = 0; i < basis.size(); ++i) {
        // 1-term: eigen iff the map fixes the ket
        const auto [cp, cg] = uc.apply(basis[i].creationOp());
        const auto [sp, sg] = usq.apply(basis[i].creationOp());
        const StateKey ct{cg.species == Species::a ? +1 : -1, cg.eta, cg.momentum};
        const StateKey st{sg.species == Species::a ? +1 : -1, sg.eta, sg.momentum};
        if (ct == basis[i] && st == basis[i]) ++simultaneous;
        for (size_t j = i + 1; j < basis.size(); ++j) {
            const auto cFam = twoTermEigen(uc, basis[i], basis[j]);
            const auto sFam = twoTermEigen(usq, basis[i], basis[j]);
            if (sFam)
                for (const auto& [z, lam] : sFam->solutions)
                    if (lam == Phase8::one() || lam == Phase8::minusOne())
                        parityPairSeen = true;
            if (!cFam || !sFam) continue;
            if (cFam->anyZ && sFam->anyZ) {
                ++simultaneous;
                continue;
            }
            // check each specific solution of one family against the other
            const auto& specific = cFam->anyZ ? sFam->solutions : cFam->solutions;
            const auto& other = cFam->anyZ ? *cFam : *sFam;
            for (const auto& [z, lam] : specific) {
                if (other.anyZ) {
                    ++simultaneous;
                } else {
                    for (const auto& [z2, lam2] : other.solutions)
                        if (z == z2) ++simultaneous;
                }
            }
        }
    }
    r.addExact("fock/parity-eigenstates", "|p,up>^c +- i |p,dn>^c have parity +-1",
               parityPairSeen);
    r.addExact("fock/no-simultaneous", "no 1- or 2-term state is both a U^s and U^c eigenstate",
               simultaneous == 0);

    // U^c squared acts with one uniform phase on the basis
    bool uniform = true;
    std::optional<Phase8> sq;
    for (const auto& key : stateBasis()) {
        const FockStateVector img = uc.apply(uc.apply(FockStateVector::ket(key)));
        const auto ratio = img.terms().count(key)
                               ? std::optional<Phase8>(img.terms().at(key))
                               : std::nullopt;
        if (!ratio) { uniform = false; break; }
        if (!sq) sq = *ratio;
        if (*sq != *ratio) uniform = false;
    }
    r.addExact("fock/uc-squared", "U^c U^c acts as one phase on single-particle states",
               uniform && sq && *sq == Phase8::minusOne(),
               sq ? "computed phase " + sq->str() : "not uniform");
    return r;
}

BracketResult bracket(const Generator& g1, const Generator& g2) {
    if (g1.daggered && !g2.daggered) return bracket(g2, g1);
    if (g1.daggered || !g2.daggered) return {false, "0"};
    if (g1.species != g2.species) return {false, "0"};
    if (g1.momentum != g2.momentum) return {false, "0"};
    if (g1.eta == g2.eta) return {false, "0"};
    return {true, "(2pi)^3 2E delta3(p - p') delta_{eta,-eta'}"};
}

MatrixC timeReversalSpinMatrix() {
    MatrixC s = MatrixC::Zero(4, 4);
    MatrixC theta(2, 2);
    theta << 0, -1, 1, 0;
    s.block(0, 0, 2, 2) = theta;
    s.block(2, 2, 2, 2) = theta;
    return s;
}

}  // namespace fock
}  // namespace spinorlab
