#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wreathrep/check_report.hpp"
#include "wreathrep/matrix.hpp"

namespace wreathrep {

// One irreducible representation of the base group, as explicit unitary
// matrices indexed by group element. Exact entries (QExt) are kept whenever
// the character field embeds in a single quadratic extension; a complex
// double copy is always available.
struct Irrep {
    int dim = 1;
    bool exact = false;
    std::vector<QMatrix> mats;   // per element, only when exact
    std::vector<CMatrix> cmats;  // per element, always

    QExt character_exact(int g) const { return mats[g].trace(); }
    std::complex<double> character(int g) const { return cmats[g].trace(); }
};

// A finite group given by its multiplication table, with conjugacy classes
// and irreducible representations attached. Element 0 is the identity;
// class 0 is {0}; classes are sorted by (size, least member).
class GroupTable {
public:
    // spec: "trivial", "cyclic:m", "sym:3", or a path to a JSON group file.
    static GroupTable load(const std::string& spec);

    int order() const { return order_; }
    int mul(int a, int b) const { return mul_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    int num_classes() const { return int(classes_.size()); }
    int class_of(int g) const { return class_of_[g]; }
    const std::vector<std::vector<int>>& classes() const { return classes_; }
    int class_rep(int c) const { return classes_[c][0]; }
    int num_irreps() const { return int(irreps_.size()); }
    const Irrep& irrep(int i) const { return irreps_[i]; }
    const std::vector<Irrep>& irreps() const { return irreps_; }
    const std::string& name() const { return name_; }
    bool all_irreps_exact() const;

    // j -> class of g^{-1} for g in class j; an involution fixing class 0.
    std::vector<int> inverse_class_involution() const;

    CheckReport verify_irreps(double tol = 1e-9) const;

private:
    friend GroupTable make_group(std::string name, std::vector<std::vector<int>> mul,
                                 std::vector<Irrep> irreps);
    int order_ = 1;
    std::string name_;
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    std::vector<int> class_of_;
    std::vector<std::vector<int>> classes_;
    std::vector<Irrep> irreps_;
};

}  // namespace wreathrep
