#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hallbound/perm_group.hpp"

namespace hallbound {

/// Largest degree any constructor will produce.
inline constexpr std::size_t kMaxConstructedDegree = 4096;

PermGroup cyclic_group(std::size_t n);
/// Dihedral group of order 2n acting on n points, n >= 3.
PermGroup dihedral_group(std::size_t n);
PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);
/// PSL(2,q) on the q+1 points of the projective line.
PermGroup psl2(std::uint64_t q);
/// SL(2,q) on the q^2-1 nonzero row vectors.
PermGroup sl2(std::uint64_t q);

/// Action on the disjoint union of the two domains.
PermGroup direct_product(const PermGroup& A, const PermGroup& B);
/// Imprimitive action of B wr T on T.degree() blocks of size B.degree().
PermGroup wreath_product(const PermGroup& B, const PermGroup& T);

/// Parse tree of a group name such as "A5 wr C2" or "(A5 x A5) x C7".
///
/// Leaves: Cn, D2n (n >= 3), Sn and An (n <= 10), PSL(2,q) (q <= 13),
/// SL(2,q) (q <= 5). Binary operators `x` (direct product) and `wr`
/// (wreath product) associate to the left with equal precedence.
struct GroupSpec {
  enum class Kind { Leaf, Direct, Wreath };
  Kind kind = Kind::Leaf;
  std::string leaf;
  std::vector<GroupSpec> children;

  std::string to_string() const;
};

/// Throws PreconditionError on unknown names or out-of-range parameters.
GroupSpec parse_group_spec(const std::string& text);
PermGroup build_group(const GroupSpec& spec);
PermGroup make_named(const std::string& text);

/// Expected order of a named leaf from the closed formula for its family.
std::uint64_t closed_form_order(const GroupSpec& spec);

/// Reads the text group format:
///
///     # comment
///     degree 5
///     (1 2 3 4 5)
///     (1 2)
///
/// One generator per line in 1-based disjoint-cycle notation.
PermGroup parse_group_file(const std::string& text);

/// Resolves a CLI group argument: an existing file path, otherwise a name.
PermGroup load_group(const std::string& spec_or_path);

}  // namespace hallbound
