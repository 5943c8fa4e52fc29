#pragma once

#include <string>
#include <utility>
#include <vector>

#include "handlecalc/error.hpp"
#include "handlecalc/scalar.hpp"

namespace handlecalc {

/// Framed-link data of a 4-dimensional handlebody.
///
/// 2-handle framings sit on the diagonal of `linking`; off-diagonal entries
/// are algebraic linking numbers. `run_through(i, j)` counts how often
/// 2-handle i runs through dotted circle j.
class HandleDecomposition {
 public:
  HandleDecomposition() = default;
  explicit HandleDecomposition(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const std::vector<std::string>& one_handles() const { return one_handles_; }
  const std::vector<std::string>& two_handles() const { return two_handles_; }
  const IntegerMatrix& linking_matrix() const { return linking_; }
  const IntegerMatrix& run_through_matrix() const { return run_through_; }
  long three_handle_count() const { return three_handles_; }

  Index num_one_handles() const { return static_cast<Index>(one_handles_.size()); }
  Index num_two_handles() const { return static_cast<Index>(two_handles_.size()); }

  bool has_one_handle(const std::string& id) const;
  bool has_two_handle(const std::string& id) const;
  bool has_id(const std::string& id) const { return has_one_handle(id) || has_two_handle(id); }

  /// Position in the respective list; throws UnknownHandle.
  Index one_index(const std::string& id) const;
  Index two_index(const std::string& id) const;

  BigInt framing(const std::string& k) const;
  BigInt link(const std::string& a, const std::string& b) const;
  BigInt run_through(const std::string& k, const std::string& h) const;

  void add_one_handle(const std::string& id);
  void add_two_handle(const std::string& id, const BigInt& framing);
  void set_framing(const std::string& k, const BigInt& framing);
  void set_link(const std::string& a, const std::string& b, const BigInt& value);
  void set_run_through(const std::string& k, const std::string& h, const BigInt& value);
  void set_three_handle_count(long count);

  void remove_one_handle(const std::string& id);
  void remove_two_handle(const std::string& id);
  void rename(const std::string& from, const std::string& to);

  /// Build directly from matrices. Checks shapes, symmetry and id uniqueness.
  static HandleDecomposition from_matrices(std::string name, std::vector<std::string> one_handles,
                                           std::vector<std::string> two_handles,
                                           IntegerMatrix linking, IntegerMatrix run_through,
                                           long three_handles = 0);

  /// Equality of handle data; the name is ignored.
  bool operator==(const HandleDecomposition& other) const;
  bool operator!=(const HandleDecomposition& other) const { return !(*this == other); }

 private:
  void check_fresh(const std::string& id) const;

  std::string name_;
  std::vector<std::string> one_handles_;
  std::vector<std::string> two_handles_;
  IntegerMatrix linking_ = IntegerMatrix(0, 0);
  IntegerMatrix run_through_ = IntegerMatrix(0, 0);
  long three_handles_ = 0;
};

/// Slide 2-handle a over 2-handle b. The move is a congruence of the boundary
/// presentation: row and column a gain sign times row and column b.
HandleDecomposition handle_slide(const HandleDecomposition& d, const std::string& a,
                                 const std::string& b, int sign);

/// Add a -1-framed unknot linking the listed 2-handles. With an empty `id`
/// the new handle is named e1, e2, ... (first unused).
HandleDecomposition blow_up(const HandleDecomposition& d,
                            const std::vector<std::pair<std::string, BigInt>>& attachments,
                            const std::string& id = "");

/// Name blow_up would choose for the next exceptional handle.
std::string next_exceptional_id(const HandleDecomposition& d);

HandleDecomposition blow_down(const HandleDecomposition& d, const std::string& e);

/// Exchange dotted circle h with 0-framed 2-handle k. The new 2-handle h
/// takes k's position and the new 1-handle k takes h's position.
HandleDecomposition dot_zero_swap(const HandleDecomposition& d, const std::string& h,
                                  const std::string& k);

/// Negate row and column k (reverse the orientation of the attaching circle).
HandleDecomposition reverse_orientation(const HandleDecomposition& d, const std::string& k);

/// Copy with every identifier prefixed.
HandleDecomposition with_prefix(const HandleDecomposition& d, const std::string& prefix);

/// Disjoint union. Identifiers of d2 that collide with d1 get a `_2`, `_3`, ... suffix.
HandleDecomposition boundary_sum(const HandleDecomposition& d1, const HandleDecomposition& d2);

/// Replace the C_p chain by the B_p block (1-handle `<prefix>0`, 2-handle `<prefix>1`).
HandleDecomposition rational_blowdown_splice(const HandleDecomposition& d,
                                             const std::vector<std::string>& chain, int p,
                                             const std::string& prefix = "b");

/// Why `chain` fails the C_p pattern in d, or empty when it matches.
std::string cp_pattern_violation(const HandleDecomposition& d,
                                 const std::vector<std::string>& chain, int p);

}  // namespace handlecalc
