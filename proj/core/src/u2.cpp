#include "picard/u2.hpp"

#include "picard/generators.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace picard {

namespace {

// Entries are small units; a compact comparable key avoids hashing mpz.
using Key = std::array<long, 8>;

Key key_of(const U2Element& u) {
    Key k;
    for (int i = 0; i < 4; ++i) {
        const GaussInt& z = u.e[static_cast<std::size_t>(i)];
        if (!z.re.fits_slong_p() || !z.im.fits_slong_p())
            return Key{99, 99, 99, 99, 99, 99, 99, 99}; // never a group element
        k[2 * i] = z.re.get_si();
        k[2 * i + 1] = z.im.get_si();
    }
    return k;
}

const Mat2z& letter_matrix(U2Letter l) {
    static const Mat2z u2_inv = [] {
        Mat2z m;
        m(0, 0) = GaussInt(0, -1);
        m(1, 1) = GaussInt(1);
        return m;
    }();
    switch (l) {
        case U2Letter::U1:
        case U2Letter::U1Inv: return u2_gen_u1();
        case U2Letter::U2: return u2_gen_u2();
        case U2Letter::U2Inv: return u2_inv;
    }
    throw std::logic_error("bad U2 letter");
}

struct WordTable {
    std::vector<U2Element> elements; // enumeration order
    std::map<Key, U2Word> words;     // BFS-minimal words
};

const WordTable& table() {
    static const WordTable t = [] {
        WordTable t;
        for (const GaussInt* a = gauss_units(); a != gauss_units() + 4; ++a)
            for (const GaussInt* b = gauss_units(); b != gauss_units() + 4; ++b) {
                Mat2z m;
                m(0, 0) = *a;
                m(1, 1) = *b;
                t.elements.push_back(m);
            }
        for (const GaussInt* a = gauss_units(); a != gauss_units() + 4; ++a)
            for (const GaussInt* b = gauss_units(); b != gauss_units() + 4; ++b) {
                Mat2z m;
                m(0, 1) = *b;
                m(1, 0) = *a;
                t.elements.push_back(m);
            }

        // BFS from the identity, appending letters on the right.
        std::deque<U2Element> frontier;
        U2Element id = Mat2z::identity();
        t.words.emplace(key_of(id), U2Word{});
        frontier.push_back(id);
        while (!frontier.empty()) {
            U2Element cur = frontier.front();
            frontier.pop_front();
            const U2Word& wcur = t.words.at(key_of(cur));
            for (U2Letter l : kU2Letters) {
                U2Element next = cur * letter_matrix(l);
                Key k = key_of(next);
                if (t.words.count(k)) continue;
                U2Word w = wcur;
                w.push_back(l);
                t.words.emplace(k, std::move(w));
                frontier.push_back(next);
            }
        }
        if (t.words.size() != t.elements.size())
            throw std::logic_error("U(2;Z[i]) enumeration and Cayley BFS disagree");
        return t;
    }();
    return t;
}

} // namespace

std::string_view u2_letter_name(U2Letter l) {
    switch (l) {
        case U2Letter::U1: return "U1";
        case U2Letter::U2: return "U2";
        case U2Letter::U1Inv: return "U1^-1";
        case U2Letter::U2Inv: return "U2^-1";
    }
    throw std::logic_error("bad U2 letter");
}

U2Letter u2_letter_inverse(U2Letter l) {
    switch (l) {
        case U2Letter::U1: return U2Letter::U1Inv;
        case U2Letter::U1Inv: return U2Letter::U1;
        case U2Letter::U2: return U2Letter::U2Inv;
        case U2Letter::U2Inv: return U2Letter::U2;
    }
    throw std::logic_error("bad U2 letter");
}

const std::vector<U2Element>& enumerate_u2() { return table().elements; }

const U2Word& u2_word(const U2Element& u) {
    auto it = table().words.find(key_of(u));
    if (it == table().words.end()) throw NotInU2();
    return it->second;
}

U2Element evaluate_u2_word(std::span<const U2Letter> word) {
    U2Element m = Mat2z::identity();
    for (U2Letter l : word) m = m * letter_matrix(l);
    return m;
}

} // namespace picard
