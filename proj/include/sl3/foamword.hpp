#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sl3/bijection.hpp"
#include "sl3/ladderweb.hpp"
#include "sl3/laurent.hpp"
#include "sl3/tableaux.hpp"

namespace sl3 {

// Split: a thick edge of a repeated entry opened into thin ones, degree -count(count-1)/2.
enum class GenKind { Zip, Unzip, DigonRemoval, Shift, Split, Dots, Identity };

struct Generator {
    GenKind kind = GenKind::Identity;
    int pos = 0;    // transposition index, entry value, or dotted node step
    int count = 1;  // dots, or multiplicity for Split
    bool adjoint = false;

    int degree() const;
    std::string str() const;
    friend bool operator==(const Generator&, const Generator&) = default;
};

struct FoamWord {
    LTWord bottom;
    LTWord top;
    std::vector<Generator> generators;  // bottom to top
    int sign = 1;

    int degree() const;
    FoamWord adjoint() const;
    std::string str() const;
    nlohmann::json to_json() const;
    // Sign is not part of equality.
    friend bool operator==(const FoamWord& a, const FoamWord& b) {
        return a.bottom == b.bottom && a.top == b.top && a.generators == b.generators;
    }
};

// Residues of the superstandard filling, entry 1 acting first.
LTWord idempotent(const Multipartition3& shape);
LadderWeb idempotent_web(const Multipartition3& shape, int n = 0);

bool orthogonality_check(const Multipartition3& a, const Multipartition3& b);

// m_k for k = 1..|shape|.
std::vector<int> dot_placement(const Multipartition3& shape);

struct PermutationPath {
    std::vector<int> sigma;                       // written order, tau_j as j
    std::vector<int> applied;                     // application order
    std::vector<std::pair<int, int>> residues;    // residues of entries j, j+1 before each swap
    std::vector<StdMultitableau3> intermediates;  // after each swap
};

// Transpositions carrying t to the superstandard filling of its shape.
PermutationPath minimal_permutation(const StdMultitableau3& t);

struct TranspositionClass {
    GenKind kind;
    int degree;
};

TranspositionClass classify_transposition(int a, int b);

FoamWord half_foam(const LadderWeb& w, const Flow& f);
// Same foam from a tableau in the image of iota and its web word.
FoamWord half_foam(const StdMultitableau3& t, const LTWord& web_word);

struct BasisFoam {
    Multipartition3 shape;
    StdMultitableau3 top_tableau;
    StdMultitableau3 bottom_tableau;
    FoamWord word;

    int degree() const { return word.degree(); }
    BasisFoam involution() const;
    nlohmann::json to_json() const;
    friend bool operator==(const BasisFoam& a, const BasisFoam& b) {
        return a.shape == b.shape && a.top_tableau == b.top_tableau && a.bottom_tableau == b.bottom_tableau &&
               a.word == b.word;
    }
};

BasisFoam basis_foam(const Multipartition3& shape, const StdMultitableau3& top, const StdMultitableau3& bottom);

std::vector<BasisFoam> enumerate_cellular_basis(const SignString& s);

// q^{-n} times the sum of q^{deg T1 + deg T2} over Std(a) x Std(b).
LaurentPoly graded_dim(const Multipartition3& a, const Multipartition3& b, int n);

// q^{-n} times the sum over flow pairs of u and v with matching boundary states.
LaurentPoly pair_graded_dim(const LadderWeb& u, const LadderWeb& v);

}  // namespace sl3
