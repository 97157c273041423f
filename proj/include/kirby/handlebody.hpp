#pragma once

#include <kirby/error.hpp>
#include <kirby/ext_int.hpp>
#include <kirby/intalg.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kirby {

enum class KnotTag { Unknot, RightTrefoil, Unknown };

std::string to_string(KnotTag tag);
/// Accepts "unknot", "right-trefoil" and "?".
KnotTag parse_knot_tag(std::string_view text);

enum class Sign { Plus = 1, Minus = -1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
Sign sign_from_int(int s);

struct TwoHandle {
  std::string label;
  ExtInt framing;
  KnotTag knot = KnotTag::Unknown;
};

struct HandleCounts {
  std::size_t h0 = 0, h1 = 0, h2 = 0, h3 = 0, h4 = 0;

  long long euler_characteristic() const {
    return static_cast<long long>(h0) - static_cast<long long>(h1) +
           static_cast<long long>(h2) - static_cast<long long>(h3) +
           static_cast<long long>(h4);
  }
  /// "(1, 0, 12, 2, 1)"
  std::string to_string() const;
  /// "one 0-handle ∪ 12 2-handles ∪ two 3-handles ∪ one 4-handle"; indices
  /// with no handles are omitted.
  std::string union_expression() const;

  friend bool operator==(const HandleCounts&, const HandleCounts&) = default;
};

/// A 4-dimensional handlebody recorded as framed-link data.
///
/// 1-handles are dotted circles, 2-handles carry a framing and knot tag, and
/// the symmetric linking matrix has the framings on its diagonal (the framing
/// is stored only there). The incidence matrix has one row per 1-handle and
/// one column per 2-handle and holds the signed algebraic number of times a
/// 2-handle runs over a dotted circle. 3- and 4-handles are counted only.
///
/// Labels are unique across 1- and 2-handles and are the only way moves
/// address handles, so references survive deletions.
class HandleDecomposition {
 public:
  /// One 0-handle, nothing else.
  HandleDecomposition() = default;

  /// Validates every structural invariant; throws Error(Domain) otherwise.
  HandleDecomposition(std::size_t h0, std::vector<std::string> one_handles,
                      std::vector<TwoHandle> two_handles, ExtMatrix linking,
                      IntMatrix incidence, std::size_t h3, std::size_t h4);

  std::size_t h0() const { return h0_; }
  std::size_t h3() const { return h3_; }
  std::size_t h4() const { return h4_; }
  const std::vector<std::string>& one_handles() const { return one_handles_; }
  std::size_t two_handle_count() const { return labels_.size(); }
  const std::vector<std::string>& two_handle_labels() const { return labels_; }
  const ExtMatrix& linking() const { return linking_; }
  const IntMatrix& incidence() const { return incidence_; }

  TwoHandle two_handle(Eigen::Index i) const;
  std::vector<TwoHandle> two_handles() const;
  const ExtInt& framing(Eigen::Index i) const { return linking_(i, i); }
  KnotTag knot(Eigen::Index i) const { return knots_[static_cast<std::size_t>(i)]; }

  bool has_label(std::string_view label) const;
  std::optional<Eigen::Index> find_two(std::string_view label) const;
  std::optional<Eigen::Index> find_one(std::string_view label) const;
  /// Throws Error(MissingLabel).
  Eigen::Index index_of_two(std::string_view label) const;
  Eigen::Index index_of_one(std::string_view label) const;

  /// Smallest unused "k<n>" / "d<n>".
  std::string fresh_two_label() const;
  std::string fresh_one_label() const;

  // Editing primitives. Each keeps the invariants (symmetry, framings on the
  // diagonal, incidence shape); moves are built from them on a copy.
  Eigen::Index add_two_handle(TwoHandle handle);
  Eigen::Index add_one_handle(std::string label);
  void remove_two_handle(Eigen::Index i);
  void remove_one_handle(Eigen::Index d);
  void set_linking(Eigen::Index i, Eigen::Index j, const ExtInt& value);
  void set_framing(Eigen::Index i, const ExtInt& value) { set_linking(i, i, value); }
  void set_knot(Eigen::Index i, KnotTag tag) { knots_[static_cast<std::size_t>(i)] = tag; }
  void set_incidence(Eigen::Index d, Eigen::Index k, const Integer& value);
  void rename_two_handle(Eigen::Index i, std::string label);
  void mark_unknown(Eigen::Index i);  // whole row/column of i, framing included
  void set_h3(std::size_t h3) { h3_ = h3; }
  void set_h4(std::size_t h4) { h4_ = h4; }

  /// Structural identity: Unknown entries match Unknown entries.
  bool identical(const HandleDecomposition& other) const;

 private:
  void check_new_label(const std::string& label) const;

  std::size_t h0_ = 1;
  std::vector<std::string> one_handles_;
  std::vector<std::string> labels_;
  std::vector<KnotTag> knots_;
  ExtMatrix linking_ = ExtMatrix(0, 0);
  IntMatrix incidence_ = IntMatrix(0, 0);
  std::size_t h3_ = 0;
  std::size_t h4_ = 0;
};

HandleCounts counts(const HandleDecomposition& x);
long long euler_characteristic(const HandleDecomposition& x);

/// Replaces the attaching circle of `handle` by its band sum with `over`
/// (negated first when sign is Minus). On the linking matrix this is the
/// congruence row_i += s row_j, col_i += s col_j; the incidence column of
/// `handle` gains s times that of `over`. The slid handle's knot tag becomes
/// Unknown.
HandleDecomposition handle_slide(const HandleDecomposition& x, std::string_view handle,
                                 std::string_view over, Sign sign);

/// Reverses the orientation of a 2-handle: negates its off-diagonal linking
/// numbers and its incidence column. Relates the two slide conventions.
HandleDecomposition reverse_orientation(const HandleDecomposition& x,
                                        std::string_view handle);

/// Adds a (sign)1-framed unknot split from everything else. The new handle
/// is labelled `label`, or the next free k<n> when empty.
HandleDecomposition blow_up(const HandleDecomposition& x, Sign sign,
                            std::string label = {});

/// Slides every handle linking the ±1-framed `handle` off it, then deletes it.
/// With `strict`, the handle must also be a certified unknot that runs over
/// no 1-handle.
HandleDecomposition blow_down(const HandleDecomposition& x, std::string_view handle,
                              bool strict = false);

/// Cancels dotted circle `dotted` against 2-handle `meridian`, which must
/// run over it exactly once algebraically. Other handles running over the
/// dotted circle are slid off the meridian first; their linking entries are
/// then marked Unknown because the slide bands cross the 1-handle.
HandleDecomposition cancel_12(const HandleDecomposition& x, std::string_view dotted,
                              std::string_view meridian);

HandleDecomposition add_three_handles(const HandleDecomposition& x, std::size_t k);
HandleDecomposition add_four_handle(const HandleDecomposition& x);

/// Boundary-sum of two handlebodies: block-diagonal linking and incidence,
/// counts added except for the single 0-handle. Labels must be disjoint.
HandleDecomposition direct_sum(const HandleDecomposition& a, const HandleDecomposition& b);

/// Cokernel of the incidence matrix (2-chains -> 1-chains).
AbelianGroup homology_h1(const HandleDecomposition& x);

/// |det(linking)| = |H_1(boundary)| for a 2-handlebody with known linking
/// data; std::nullopt (indeterminate) when the form is degenerate. Throws
/// HasOneHandles, HasHigherHandles or UnknownEntries on precondition failure.
std::optional<Integer> boundary_h1_order(const HandleDecomposition& x);

/// The linking matrix as an integer matrix; throws UnknownEntries if any entry
/// is Unknown.
IntMatrix known_linking(const HandleDecomposition& x);

}  // namespace kirby
