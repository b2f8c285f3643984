#pragma once

#include "pencilgit/pgl2.hpp"

namespace pencilgit {

/// Conjugacy-class data and the exact character table of one of the finite
/// groups S4, A4, D8, D4, C3 (matrix realizations from pgl2; tables are
/// standard data with orthogonality self-checked at load).
class GroupData {
public:
    struct ConjClass {
        ProjMat rep;
        std::size_t size;
        int element_order;
        std::size_t inverse_class;
        std::string label;
    };

    /// name in {S4, A4, D8, D4, C3}; the matrix field needs a 4th root of unity
    static GroupData builtin(const std::string& name, const FieldPtr& matrix_field);

    const std::string& name() const { return name_; }
    const FiniteSubgroup& group() const { return group_; }
    const std::vector<ConjClass>& classes() const { return classes_; }
    const FieldPtr& table_field() const { return table_field_; }
    const std::vector<std::vector<Fel>>& table() const { return table_; }
    const std::vector<std::string>& irrep_names() const { return irrep_names_; }

    std::size_t class_of(const ProjMat& g) const; // NotASubgroup if g is outside
    std::size_t irrep_index(const std::string& irrep_name) const;

    /// exact row and column orthogonality (InternalError on failure)
    void check_orthogonality() const;

private:
    GroupData(std::string name, FiniteSubgroup group);
    void compute_classes();

    std::string name_;
    FiniteSubgroup group_;
    std::vector<ConjClass> classes_;
    FieldPtr table_field_;
    std::vector<std::vector<Fel>> table_;
    std::vector<std::string> irrep_names_;
    std::vector<std::pair<ProjMat, std::size_t>> class_map_; // sorted by matrix
};

/// one exact value per conjugacy class, over the group's table field
using ClassFunction = std::vector<Fel>;

/// trace of the conjugation action on trace-zero 2x2 matrices:
/// tr(M)^2 / det(M) - 1, a rational integer on every class
ClassFunction adjoint_character(const GroupData& G);

/// the 2-dimensional irreducible character of S4 (2, 0, 2, -1, 0), or its
/// restriction to D8 along the fixed embedding
ClassFunction v_character(const GroupData& G);

/// multiplicities <chi, chi_i>; NotACharacter if any is negative or non-integral
std::vector<Int> decompose(const ClassFunction& chi, const GroupData& G);

/// restriction along H <= G by conjugacy matching in G (NotASubgroup)
ClassFunction restrict_class_function(const ClassFunction& chi, const GroupData& G,
                                      const GroupData& H);

/// embed integer class values into a group's table field
ClassFunction class_function_from_ints(const GroupData& G, const std::vector<Int>& values);

} // namespace pencilgit
