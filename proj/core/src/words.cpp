#include "picard/words.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace picard {

namespace {

void append_letter(GeneratorWord& w, Gen g, Int e) {
    if (e == 0) return;
    if (!w.empty() && w.back().gen == g) {
        w.back().exp += e;
        if (w.back().exp == 0) w.pop_back();
        return;
    }
    w.push_back({g, std::move(e)});
}

void append_word(GeneratorWord& w, const GeneratorWord& tail) {
    for (const auto& l : tail) append_letter(w, l.gen, l.exp);
}

void append_inverse_word(GeneratorWord& w, const GeneratorWord& tail) {
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) append_letter(w, it->gen, -it->exp);
}

GeneratorWord from_u2_word(const U2Word& u) {
    GeneratorWord w;
    for (U2Letter l : u) {
        switch (l) {
            case U2Letter::U1: append_letter(w, Gen::M1, 1); break;
            case U2Letter::U1Inv: append_letter(w, Gen::M1, -1); break;
            case U2Letter::U2: append_letter(w, Gen::M2, 1); break;
            case U2Letter::U2Inv: append_letter(w, Gen::M2, -1); break;
        }
    }
    return w;
}

struct HeisVec {
    GaussInt tau1, tau2;
    Int t;
};

// (p)(q) = (p.tau + q.tau, p.t + q.t + 2 Im(conj(q.tau) . p.tau))
HeisVec heis_compose(const HeisVec& p, const HeisVec& q) {
    GaussInt pairing = q.tau1.conj() * p.tau1 + q.tau2.conj() * p.tau2;
    return {p.tau1 + q.tau1, p.tau2 + q.tau2, p.t + q.t + 2 * pairing.im};
}

// Translation atom: T1^e or a rotation-conjugated T1^e, translating by
// e * (a,b) with zero central part.
struct Atom {
    GaussInt a, b;                  // unit step, or (1,1) for plain T1
    const GeneratorWord* conjugator; // null for plain T1
    Int exp;
};

const ConjugateEntry& conjugate_for(const GaussInt& a, const GaussInt& b) {
    for (const ConjugateEntry& e : unit_pair_conjugates())
        if (e.a == a && e.b == b) return e;
    throw std::logic_error("unit pair missing from conjugate table");
}

} // namespace

std::string word_to_string(const GeneratorWord& w) {
    if (w.empty()) return "e";
    std::ostringstream os;
    bool first = true;
    for (const auto& l : w) {
        if (!first) os << " ";
        first = false;
        os << gen_name(l.gen);
        if (l.exp != 1) os << "^" << l.exp.get_str();
    }
    return os.str();
}

Mat4z evaluate_word(const GeneratorWord& w) {
    Mat4z m = Mat4z::identity();
    for (const auto& l : w) m = m * gen_power(l.gen, l.exp);
    return m;
}

StabParams StabParams::identity() {
    StabParams p;
    p.t = 0;
    p.U = Mat2z::identity();
    return p;
}

Mat4z StabParams::to_matrix() const {
    Int norm_sq = tau1.norm() + tau2.norm();
    if (mpz_odd_p(norm_sq.get_mpz_t()) || mpz_odd_p(t.get_mpz_t()))
        throw std::domain_error("stabilizer parameters leave Z[i]");
    Mat4z m = Mat4z::identity();
    GaussInt c1 = tau1.conj(), c2 = tau2.conj();
    m(0, 1) = -(c1 * U(0, 0) + c2 * U(1, 0));
    m(0, 2) = -(c1 * U(0, 1) + c2 * U(1, 1));
    m(0, 3) = GaussInt(-norm_sq / 2, t / 2);
    m(1, 1) = U(0, 0);
    m(1, 2) = U(0, 1);
    m(1, 3) = tau1;
    m(2, 1) = U(1, 0);
    m(2, 2) = U(1, 1);
    m(2, 3) = tau2;
    return m;
}

StabParams evaluate_word_stabilizer(const GeneratorWord& w) {
    StabParams p = StabParams::identity();
    for (const auto& l : w) {
        switch (l.gen) {
            case Gen::T1: {
                // P * N(sigma,0) = N((tau,t)(U sigma, 0)) * M_U
                GaussInt s1 = GaussInt(l.exp), s2 = GaussInt(l.exp);
                GaussInt u1 = p.U(0, 0) * s1 + p.U(0, 1) * s2;
                GaussInt u2 = p.U(1, 0) * s1 + p.U(1, 1) * s2;
                GaussInt pairing = u1.conj() * p.tau1 + u2.conj() * p.tau2;
                p.tau1 += u1;
                p.tau2 += u2;
                p.t += 2 * pairing.im;
                break;
            }
            case Gen::T2:
                p.t += 2 * l.exp; // central
                break;
            case Gen::M1: {
                if (mpz_odd_p(l.exp.get_mpz_t())) p.U = p.U * u2_gen_u1();
                break;
            }
            case Gen::M2: {
                Int rem = l.exp % 4;
                if (rem < 0) rem += 4;
                for (Int k = 0; k < rem; ++k) p.U = p.U * u2_gen_u2();
                break;
            }
            case Gen::R:
                throw std::invalid_argument("word leaves the stabilizer: contains R");
        }
    }
    return p;
}

const std::vector<ConjugateEntry>& unit_pair_conjugates() {
    static const std::vector<ConjugateEntry> table = [] {
        // Sort the 32 rotations by (word length, word) so the shortest
        // conjugator wins deterministically.
        std::vector<std::pair<U2Word, U2Element>> order;
        for (const U2Element& u : enumerate_u2()) order.emplace_back(u2_word(u), u);
        std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
            if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
            return std::lexicographical_compare(
                x.first.begin(), x.first.end(), y.first.begin(), y.first.end(),
                [](U2Letter a, U2Letter b) { return static_cast<int>(a) < static_cast<int>(b); });
        });

        std::vector<ConjugateEntry> table;
        for (const auto& [word, u] : order) {
            GaussInt a = u(0, 0) + u(0, 1);
            GaussInt b = u(1, 0) + u(1, 1);
            bool seen = false;
            for (const auto& e : table)
                if (e.a == a && e.b == b) { seen = true; break; }
            if (seen) continue;
            ConjugateEntry entry{a, b, from_u2_word(word)};
            // certify W T1 W^-1 = N((a,b),0) before trusting the entry
            GeneratorWord probe = entry.conjugator;
            append_letter(probe, Gen::T1, 1);
            append_inverse_word(probe, entry.conjugator);
            if (evaluate_word(probe) != integral_translation(a, b, Int(0)))
                throw std::logic_error("conjugate table entry failed verification");
            table.push_back(std::move(entry));
        }
        if (table.size() != 16) throw std::logic_error("expected 16 unit pairs");
        return table;
    }();
    return table;
}

StabWord stab_word(const GroupElement& g) {
    if (!g.integral_entries())
        throw std::invalid_argument("stabilizer words need integral entries");
    return stab_word(narrow(g.mat()));
}

StabWord stab_word(const Mat4z& p) {
    if (!is_j_unitary(p)) throw std::invalid_argument("not a group member");
    if (!p(3, 0).is_zero()) throw NotInStabilizer();

    // Integral Langlands read-off: P = lambda * N_(tau,t) * M_U with r = 1.
    GaussInt lambda = p(0, 0);
    if (!lambda.is_unit()) throw UnitNormalizationNeeded();
    GaussInt il = lambda.conj();
    Mat2z U;
    U(0, 0) = il * p(1, 1);
    U(0, 1) = il * p(1, 2);
    U(1, 0) = il * p(2, 1);
    U(1, 1) = il * p(2, 2);
    GaussInt tau1 = il * p(1, 3);
    GaussInt tau2 = il * p(2, 3);
    GaussInt corner = il * p(0, 3);
    Int t = 2 * corner.im;

    StabWord out;
    out.scalar_unit = lambda;

    std::vector<Atom> atoms;
    bool odd1 = mpz_odd_p(Int(tau1.norm()).get_mpz_t());
    bool odd2 = mpz_odd_p(Int(tau2.norm()).get_mpz_t());
    if (odd1 != odd2) throw std::invalid_argument("|tau|^2 is odd: not an integral stabilizer element");

    if (tau1.is_zero() && tau2.is_zero()) {
        // central part only
    } else if (tau1.is_unit() && tau2.is_unit()) {
        atoms.push_back({tau1, tau2, &conjugate_for(tau1, tau2).conjugator, Int(1)});
    } else {
        Int d1 = odd1 ? 1 : 0;
        GaussInt s1 = tau1 + GaussInt(d1);
        GaussInt s2 = tau2 + GaussInt(d1);
        Int d2 = mpz_odd_p(Int(s1.re + s2.re).get_mpz_t()) ? 1 : 0;
        s1.re -= d2;
        s2.im -= d2;
        // solve s = x(1,1) + y(1,-1) + z(i,i) + w(i,-i)
        Int x = (s1.re + s2.re) / 2;
        Int y = (s1.re - s2.re) / 2;
        Int z = (s1.im + s2.im) / 2;
        Int w = (s1.im - s2.im) / 2;
        if (x + y != s1.re || x - y != s2.re || z + w != s1.im || z - w != s2.im)
            throw std::logic_error("unit-pair basis split failed");
        auto push = [&atoms](long a_re, long a_im, long b_re, long b_im, Int e) {
            if (e == 0) return;
            GaussInt a(a_re, a_im), b(b_re, b_im);
            atoms.push_back({a, b, &conjugate_for(a, b).conjugator, std::move(e)});
        };
        if (x != 0) atoms.push_back({GaussInt(1), GaussInt(1), nullptr, x});
        push(1, 0, -1, 0, y);
        push(0, 1, 0, 1, z);
        push(0, 1, 0, -1, w);
        push(1, 0, 0, 1, d2);
        if (d1 != 0) atoms.push_back({GaussInt(1), GaussInt(1), nullptr, -d1});
    }

    // exact central bookkeeping over the chosen atoms
    HeisVec acc{GaussInt(0), GaussInt(0), Int(0)};
    for (const Atom& at : atoms)
        acc = heis_compose(acc, {at.a * GaussInt(at.exp), at.b * GaussInt(at.exp), Int(0)});
    if (acc.tau1 != tau1 || acc.tau2 != tau2)
        throw std::logic_error("translation atoms do not sum to tau");
    Int delta = (t - acc.t) / 2;
    if (2 * delta != t - acc.t) throw std::logic_error("odd central defect");

    for (const Atom& at : atoms) {
        if (at.conjugator == nullptr) {
            append_letter(out.word, Gen::T1, at.exp);
        } else {
            append_word(out.word, *at.conjugator);
            append_letter(out.word, Gen::T1, at.exp);
            append_inverse_word(out.word, *at.conjugator);
        }
    }
    append_word(out.word, from_u2_word(u2_word(U)));
    append_letter(out.word, Gen::T2, delta);
    return out;
}

namespace {

Mat4z product(std::initializer_list<Mat4z> ms) {
    Mat4z r = Mat4z::identity();
    for (const Mat4z& m : ms) r = r * m;
    return r;
}

IdentityVerdict check(std::string name, const Mat4z& lhs, const Mat4z& rhs) {
    IdentityVerdict v{std::move(name), lhs == rhs, ""};
    if (!v.holds) {
        std::ostringstream os;
        os << "rhs * lhs^-1 =\n" << rhs * j_inverse(lhs);
        v.detail = os.str();
    }
    return v;
}

Mat4z N(long ar, long ai, long br, long bi, long t) {
    return integral_translation(GaussInt(ar, ai), GaussInt(br, bi), Int(t));
}

Mat4z word_pow(const Mat4z& m, int e) {
    Mat4z b = e < 0 ? j_inverse(m) : m;
    int n = e < 0 ? -e : e;
    Mat4z r = Mat4z::identity();
    for (int i = 0; i < n; ++i) r = r * b;
    return r;
}

IdentityVerdict check_six_factor(bool corrected) {
    const Mat4z p1 = N(1, 1, 0, 0, 0);   // N((1+i,0),0)
    const Mat4z q1 = N(-1, 1, 0, 0, 0);  // N((i-1,0),0)
    const Mat4z p2 = N(0, 0, 1, 1, 0);   // N((0,1+i),0)
    const Mat4z q2v = N(0, 0, 1, 1, 0);  // printed fifth factor repeats (0,1+i)
    const Mat4z q2c = N(0, 0, -1, 1, 0); // corrected fifth factor (0,i-1)
    const Mat4z t2 = gen_matrix(Gen::T2);

    int pass = 0, fail = 0;
    std::array<int, 4> first{};
    bool have_first = false;
    for (int k1 = -2; k1 <= 2; ++k1)
        for (int l1 = -2; l1 <= 2; ++l1)
            for (int k2 = -2; k2 <= 2; ++k2)
                for (int l2 = -2; l2 <= 2; ++l2) {
                    GaussInt tau1 = GaussInt(k1) * GaussInt(1, 1) + GaussInt(l1) * GaussInt(-1, 1);
                    GaussInt tau2 = GaussInt(k2) * GaussInt(1, 1) + GaussInt(l2) * GaussInt(-1, 1);
                    Mat4z lhs = integral_translation(tau1, tau2, Int(0));
                    Mat4z rhs = product({word_pow(p1, k1), word_pow(q1, l1),
                                         word_pow(t2, 2 * k1 * l1), word_pow(p2, k2),
                                         word_pow(corrected ? q2c : q2v, l2),
                                         word_pow(t2, (corrected ? 2 : -2) * k2 * l2)});
                    if (lhs == rhs) {
                        ++pass;
                    } else {
                        ++fail;
                        if (!have_first) {
                            first = {k1, l1, k2, l2};
                            have_first = true;
                        }
                    }
                }
    IdentityVerdict v;
    v.name = corrected ? "six-factor product with N((0,i-1),0)^l2 and T2^{+2 k2 l2}"
                       : "N(tau,0) six-factor product over the (1+i),(i-1) basis, as printed";
    v.holds = fail == 0;
    std::ostringstream os;
    os << pass << " of " << pass + fail << " tuples in [-2,2]^4 hold";
    if (fail)
        os << "; first failure at (k1,l1,k2,l2)=(" << first[0] << "," << first[1] << ","
           << first[2] << "," << first[3] << ")";
    v.detail = os.str();
    return v;
}

} // namespace

bool ProofIdentityReport::all_verbatim_hold() const {
    return std::all_of(verbatim.begin(), verbatim.end(), [](const auto& v) { return v.holds; });
}

bool ProofIdentityReport::all_derived_hold() const {
    return std::all_of(derived.begin(), derived.end(), [](const auto& v) { return v.holds; });
}

ProofIdentityReport verify_proof_identities() {
    ProofIdentityReport rep;
    const Mat4z t1 = gen_matrix(Gen::T1);
    const Mat4z t2 = gen_matrix(Gen::T2);
    const Mat4z m1 = gen_matrix(Gen::M1);
    const Mat4z m2 = gen_matrix(Gen::M2);
    const Mat4z t1i = gen_inverse(Gen::T1);
    const Mat4z t2i = gen_inverse(Gen::T2);
    const Mat4z m2i = gen_inverse(Gen::M2);
    const Mat4z m121 = product({m1, m2, m1});

    rep.verbatim.push_back(check("N((1+i,0),0) = T1 * N((i,-1),0) * T2",
                                 N(1, 1, 0, 0, 0), product({t1, N(0, 1, -1, 0, 0), t2})));
    rep.verbatim.push_back(check("N((i-1,0),0) = N((i,1),0) * T1^-1 * T2^-1",
                                 N(-1, 1, 0, 0, 0), product({N(0, 1, 1, 0, 0), t1i, t2i})));
    rep.verbatim.push_back(check("N((0,1+i),0) = T1 * N((-1,i),0) * T2",
                                 N(0, 0, 1, 1, 0), product({t1, N(-1, 0, 0, 1, 0), t2})));
    rep.verbatim.push_back(check("N((0,i-1),0) = N((1,i),0) * T1^-1 * T2^-1",
                                 N(0, 0, -1, 1, 0), product({N(1, 0, 0, 1, 0), t1i, t2i})));
    rep.verbatim.push_back(check("N((i,1),0) = M2 * T1 * M2^-1",
                                 N(0, 1, 1, 0, 0), product({m2, t1, m2i})));
    rep.verbatim.push_back(
        check("N((i,-1),0) = M1 M2^2 M1 M2 * T1 * M2^3 (M1 M2 M1)^2", N(0, 1, -1, 0, 0),
              product({m1, word_pow(m2, 2), m1, m2, t1, word_pow(m2, 3), word_pow(m121, 2)})));
    rep.verbatim.push_back(
        check("N((-1,i),0) = M2^2 M1 M2 M1 * T1 * M2^2 (M1 M2 M1)^3", N(-1, 0, 0, 1, 0),
              product({word_pow(m2, 2), m1, m2, m1, t1, word_pow(m2, 2), word_pow(m121, 3)})));
    rep.verbatim.push_back(check("N((1,i),0) = M1 M2 M1 * T1 * (M1 M2 M1)^3", N(1, 0, 0, 1, 0),
                                 product({m121, t1, word_pow(m121, 3)})));
    rep.verbatim.push_back(check_six_factor(false));

    rep.derived.push_back(check("N((i-1,0),0) = N((i,1),0) * T1^-1 * T2",
                                N(-1, 1, 0, 0, 0), product({N(0, 1, 1, 0, 0), t1i, t2})));
    rep.derived.push_back(check("N((0,i-1),0) = N((1,i),0) * T1^-1 * T2",
                                N(0, 0, -1, 1, 0), product({N(1, 0, 0, 1, 0), t1i, t2})));
    rep.derived.push_back(check_six_factor(true));

    IdentityVerdict table{"unit-pair conjugate table: W T1 W^-1 = N((a,b),0), 16 pairs", true, ""};
    try {
        table.holds = unit_pair_conjugates().size() == 16;
    } catch (const std::exception& e) {
        table.holds = false;
        table.detail = e.what();
    }
    rep.derived.push_back(std::move(table));
    return rep;
}

} // namespace picard
