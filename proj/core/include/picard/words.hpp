#pragma once

#include "picard/generators.hpp"
#include "picard/langlands.hpp"
#include "picard/u2.hpp"

#include <span>
#include <string>
#include <vector>

namespace picard {

struct WordLetter {
    Gen gen;
    Int exp;

    friend bool operator==(const WordLetter& a, const WordLetter& b) {
        return a.gen == b.gen && a.exp == b.exp;
    }
};

/// Word in the five generators with integer exponents; evaluates left to
/// right to an integral group element.
using GeneratorWord = std::vector<WordLetter>;

std::string word_to_string(const GeneratorWord& w);

/// Exact evaluation, one matrix product per letter (powers in closed form).
Mat4z evaluate_word(const GeneratorWord& w);

/// Stabilizer-only evaluation carried on Langlands parameters instead of
/// matrices; rejects words containing R. Orders of magnitude faster than
/// evaluate_word on long words, and cross-checked against it in tests.
struct StabParams {
    GaussInt tau1, tau2;
    Int t;
    Mat2z U;

    static StabParams identity();
    Mat4z to_matrix() const; // N_(tau,t) * M_U in closed form
    friend bool operator==(const StabParams& a, const StabParams& b) {
        return a.tau1 == b.tau1 && a.tau2 == b.tau2 && a.t == b.t && a.U == b.U;
    }
};

StabParams evaluate_word_stabilizer(const GeneratorWord& w);

struct StabWord {
    GaussInt scalar_unit; // reported separately, never silently dropped
    GeneratorWord word;
};

/// Constructive generation: decomposes an integral stabilizer element into a
/// word in T1, T2, M1, M2. The translation part is assembled from T1 and
/// conjugates of T1 by rotation words (one conjugate per unit pair), with the
/// central T2 correction computed exactly and collected at the end.
StabWord stab_word(const Mat4z& p);
StabWord stab_word(const GroupElement& g);

/// The conjugation table behind stab_word: for each unit pair (a,b), a
/// rotation word W with W T1 W^-1 = N((a,b),0). Exposed for the audit report
/// and tests.
struct ConjugateEntry {
    GaussInt a, b;
    GeneratorWord conjugator; // rotation letters only
};
const std::vector<ConjugateEntry>& unit_pair_conjugates();

struct IdentityVerdict {
    std::string name;
    bool holds;
    std::string detail; // discrepancy description when the check fails
};

struct ProofIdentityReport {
    std::vector<IdentityVerdict> verbatim; // the displayed identities, as printed
    std::vector<IdentityVerdict> derived;  // the corrected forms stab_word relies on
    bool all_verbatim_hold() const;
    bool all_derived_hold() const;
};

/// Audits each displayed identity by exact 4x4 multiplication. Failures are
/// data, not errors: the verdict table records them.
ProofIdentityReport verify_proof_identities();

} // namespace picard
