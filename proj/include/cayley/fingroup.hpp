#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cayley/bigint.hpp"
#include "cayley/errors.hpp"

namespace cayley {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Witness for a failed class-2 check: [[g,h],z] != identity.
struct ClassWitness {
    int g = -1;
    int h = -1;
    int z = -1;
};

/// A finite group given extensionally by its multiplication table.
///
/// Elements are indices 0..order()-1; index 0 is always the identity.
/// Construction validates the full set of group laws (Latin square,
/// identity at index 0, associativity over all triples) and precomputes
/// inverses, element orders, the center and the class-2 status.
/// Instances are immutable and safe to share between threads.
class FiniteGroup {
public:
    /// Validates the table and builds the group.
    /// Throws NotLatinSquare / NoIdentityAtIndexZero / NotAssociative /
    /// DuplicateLabel / ReservedLabelX naming the violated law.
    static GroupPtr from_table(std::vector<std::string> labels,
                               const std::vector<std::vector<int>>& table,
                               std::string name = "custom");

    /// Catalog: z2, z4, z2xz2, s3, d4, q8, heis3, d8_16.
    /// Throws UnknownName otherwise.
    static GroupPtr builtin(const std::string& name);
    static const std::vector<std::string>& builtin_names();

    /// Group file format:
    ///   order K
    ///   elements L0 L1 ... L(K-1)
    ///   K rows of K labels (row r, column c = label of r*c)
    /// '#'-lines and blank lines are ignored. Throws GroupFileError with
    /// the offending line number.
    static GroupPtr load(std::istream& in, std::string name = "file");
    static GroupPtr load_file(const std::string& path);
    void save(std::ostream& out) const;

    const std::string& name() const { return name_; }
    int order() const { return k_; }
    const std::string& label(int g) const { return labels_[static_cast<std::size_t>(g)]; }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Index of a label, or -1 when unknown.
    int index_of(const std::string& label) const;

    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * k_ + b]; }
    int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
    int elt_order(int a) const { return elt_order_[static_cast<std::size_t>(a)]; }

    /// g^e with the exponent reduced modulo elt_order(g) first, so
    /// arbitrarily large (negative) exponents never overflow.
    int power(int g, long long e) const;
    int power(int g, const BigInt& e) const;

    /// [g,h] = g^-1 h^-1 g h, exactly in that order.
    int commutator(int g, int h) const;

    bool is_class_at_most_two() const { return class2_; }
    /// Present iff is_class_at_most_two() is false.
    const std::optional<ClassWitness>& class_witness() const { return class_witness_; }

    const std::vector<int>& center() const { return center_; }
    /// lcm of all element orders.
    long long exponent() const { return exponent_; }

    /// Flat k*k table, row-major; handy for machine construction.
    const std::vector<int>& flat_table() const { return table_; }

private:
    FiniteGroup() = default;

    std::string name_;
    int k_ = 0;
    std::vector<std::string> labels_;
    std::vector<int> table_;  // k*k row-major
    std::vector<int> inv_;
    std::vector<int> elt_order_;
    std::vector<int> center_;
    long long exponent_ = 1;
    bool class2_ = false;
    std::optional<ClassWitness> class_witness_;
};

/// Element of a specific group; operations check group identity.
class GroupElement {
public:
    GroupElement(const FiniteGroup& group, int index) : group_(&group), index_(index) {}

    int index() const { return index_; }
    const FiniteGroup& group() const { return *group_; }
    const std::string& label() const { return group_->label(index_); }

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.group_ == b.group_ && a.index_ == b.index_;
    }

private:
    const FiniteGroup* group_;
    int index_;
};

GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);
GroupElement power(const GroupElement& g, const BigInt& e);
GroupElement commutator(const GroupElement& g, const GroupElement& h);

}  // namespace cayley
