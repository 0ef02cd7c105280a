#include "parsym/nseries.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace parsym {

bool Alphabet::fully_tagged() const {
    for (const auto& l : letters)
        if (l.k < 1 || l.k > 3 || l.factor < 0) return false;
    return !letters.empty();
}

NCSeries3::NCSeries3(int nletters)
    : L_(nletters),
      deg0_(1.0, 0.0),
      deg1_(L_, Cx{}),
      deg2_(L_ * L_, Cx{}),
      deg3_(L_ * L_ * L_, Cx{}) {}

void NCSeries3::multiply_exp(const std::vector<Cx>& c) {
    // F <- F * (1 + C + C^2/2 + C^3/6), updated highest degree first so the
    // lower-degree pieces on the right-hand side are the old ones.
    const int L = L_;
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j) {
            Cx cij = c[i] * c[j];
            for (int k = 0; k < L; ++k)
                deg3_[(i * L + j) * L + k] += deg2_[i * L + j] * c[k] +
                                              deg1_[i] * (c[j] * c[k]) * 0.5 +
                                              deg0_ * cij * c[k] * (1.0 / 6.0);
        }
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j)
            deg2_[i * L + j] += deg1_[i] * c[j] + deg0_ * c[i] * c[j] * 0.5;
    for (int i = 0; i < L; ++i) deg1_[i] += deg0_ * c[i];
}

void NCSeries3::multiply(const NCSeries3& o) {
    if (o.L_ != L_) throw std::invalid_argument("series alphabets differ");
    const int L = L_;
    std::vector<Cx> d3(L * L * L), d2(L * L), d1(L);
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j)
            for (int k = 0; k < L; ++k)
                d3[(i * L + j) * L + k] = deg3_[(i * L + j) * L + k] * o.deg0_ +
                                          deg2_[i * L + j] * o.deg1_[k] +
                                          deg1_[i] * o.deg2_[j * L + k] +
                                          deg0_ * o.deg3_[(i * L + j) * L + k];
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j)
            d2[i * L + j] = deg2_[i * L + j] * o.deg0_ + deg1_[i] * o.deg1_[j] +
                            deg0_ * o.deg2_[i * L + j];
    for (int i = 0; i < L; ++i) d1[i] = deg1_[i] * o.deg0_ + deg0_ * o.deg1_[i];
    deg3_ = std::move(d3);
    deg2_ = std::move(d2);
    deg1_ = std::move(d1);
    deg0_ *= o.deg0_;
}

NCSeries3 transport(const Alphabet& alphabet, const PathWord& path, const StepControl& ctl) {
    const int L = static_cast<int>(alphabet.letters.size());
    NCSeries3 F(L);
    std::vector<const LogForm*> forms;
    forms.reserve(L);
    for (const auto& l : alphabet.letters) forms.push_back(&l.form);
    std::vector<Cx> c(L);
    walk_path(path, forms, ctl, [&](const CPoint2& p0, const CPoint2& p1) {
        for (int l = 0; l < L; ++l) {
            Cx inc{0.0, 0.0};
            for (const auto& [pole, mult] : alphabet.letters[l].form.xpoles)
                inc += double(mult) * std::log((p1.x - pole) / (p0.x - pole));
            for (const auto& [pole, mult] : alphabet.letters[l].form.ypoles)
                inc += double(mult) * std::log((p1.y - pole) / (p0.y - pole));
            c[l] = inc;
        }
        F.multiply_exp(c);
    });
    return F;
}

Cx iterated_integral(const std::vector<LogForm>& forms, const PathWord& path,
                     const StepControl& ctl) {
    if (forms.empty() || forms.size() > 3)
        throw std::invalid_argument("iterated_integral: 1 to 3 forms");
    Alphabet a;
    for (const auto& f : forms) a.letters.push_back(Letter{f, 0, -1});
    NCSeries3 F = transport(a, path, ctl);
    switch (forms.size()) {
        case 1: return F.coeff(0);
        case 2: return F.coeff(0, 1);
        default: return F.coeff(0, 1, 2);
    }
}

double check_composition(const Alphabet& alphabet, const PathWord& g1, const PathWord& g2,
                         const StepControl& ctl) {
    if (dist2(g1.end(), g2.start()) > 1e-12)
        throw std::invalid_argument("check_composition: paths do not compose");
    NCSeries3 Fa = transport(alphabet, g1, ctl);
    const NCSeries3 Fb = transport(alphabet, g2, ctl);
    const NCSeries3 Fc = transport(alphabet, concat(g1, g2), ctl);
    Fa.multiply(Fb);
    const int L = static_cast<int>(alphabet.letters.size());
    double res = 0.0;
    for (int i = 0; i < L; ++i) {
        res = std::max(res, std::abs(Fa.coeff(i) - Fc.coeff(i)));
        for (int j = 0; j < L; ++j) {
            res = std::max(res, std::abs(Fa.coeff(i, j) - Fc.coeff(i, j)));
            for (int k = 0; k < L; ++k)
                res = std::max(res, std::abs(Fa.coeff(i, j, k) - Fc.coeff(i, j, k)));
        }
    }
    return res;
}

CommutatorResiduals check_commutator(const LogForm& w1, const LogForm& w2, const LogForm& w3,
                                     const PathWord& alpha, const PathWord& beta,
                                     const StepControl& ctl) {
    if (!alpha.closed() || !beta.closed() || dist2(alpha.start(), beta.start()) > 1e-12)
        throw std::invalid_argument("check_commutator: loops must share a base point");

    Alphabet a;
    a.letters = {Letter{w1}, Letter{w2}, Letter{w3}};
    const PathWord comm = commutator(alpha, beta);
    const NCSeries3 Fc = transport(a, comm, ctl);
    const NCSeries3 Fa = transport(a, alpha, ctl);
    const NCSeries3 Fb = transport(a, beta, ctl);

    CommutatorResiduals r;
    for (int i = 0; i < 3; ++i) r.part_a = std::max(r.part_a, std::abs(Fc.coeff(i)));

    // depth 2: int_{[a,b]} w1 o w2 = int_a w1 int_b w2 - int_b w1 int_a w2
    Cx rhs2 = Fa.coeff(0) * Fb.coeff(1) - Fb.coeff(0) * Fa.coeff(1);
    r.part_b = std::abs(Fc.coeff(0, 1) - rhs2);

    // depth 3, six-term right-hand side
    Cx rhs3 = Fa.coeff(0, 1) * Fb.coeff(2) - Fb.coeff(0, 1) * Fa.coeff(2) +
              Fa.coeff(2, 1) * Fb.coeff(0) - Fb.coeff(2, 1) * Fa.coeff(0) -
              Fa.coeff(0) * Fb.coeff(1) * Fa.coeff(2) + Fb.coeff(0) * Fa.coeff(1) * Fb.coeff(2);
    r.part_c = std::abs(Fc.coeff(0, 1, 2) - rhs3);
    return r;
}

Cx project_A(const NCSeries3& series, const Alphabet& alphabet) {
    if (!alphabet.fully_tagged())
        throw std::invalid_argument("project_A: alphabet must be fully tagged");
    const int L = static_cast<int>(alphabet.letters.size());
    Cx sum{0.0, 0.0};
    for (int i = 0; i < L; ++i) {
        if (alphabet.letters[i].k != 1) continue;
        for (int j = 0; j < L; ++j) {
            if (alphabet.letters[j].k != 2) continue;
            for (int k = 0; k < L; ++k) {
                if (alphabet.letters[k].k != 3) continue;
                sum += series.coeff(i, j, k);
            }
        }
    }
    return sum;
}

Cx project_B(const NCSeries3& series, const Alphabet& alphabet) {
    if (!alphabet.fully_tagged())
        throw std::invalid_argument("project_B: alphabet must be fully tagged");
    const int L = static_cast<int>(alphabet.letters.size());
    Cx sum{0.0, 0.0};
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j)
            for (int k = 0; k < L; ++k) {
                const Letter& a = alphabet.letters[i];
                const Letter& b = alphabet.letters[j];
                const Letter& c = alphabet.letters[k];
                if (a.k == b.k || b.k == c.k || a.k == c.k) continue;
                if (a.factor == c.factor) continue;  // split repeat or all equal
                int inv = (a.factor > b.factor) + (a.factor > c.factor) + (b.factor > c.factor);
                double w = (inv % 2 == 0) ? 1.0 : -1.0;
                sum += w * series.coeff(i, j, k);
            }
    return sum;
}

}  // namespace parsym
