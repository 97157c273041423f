#pragma once

#include <kirby/certificate.hpp>
#include <kirby/handlebody.hpp>

#include <string>
#include <vector>

namespace kirby {

enum class ChainEnd { First, Last };

/// A copy of C_p inside a host decomposition, together with the 2-handle
/// (framing q, arbitrary) that links one end of the chain once.
///
/// chain[0] carries framing -(p+2); the remaining chain handles carry -2.
struct Figure6Shape {
  HandleDecomposition host;
  std::vector<std::string> chain;
  std::string attachment;
  int p = 2;
  ChainEnd end = ChainEnd::Last;
};

/// A cusp neighborhood (0-framed right trefoil) and a 2-handle linking it once.
struct Figure8Shape {
  HandleDecomposition host;
  std::string cusp;
  std::string attachment;
  bool conjectural = false;  // host is a model outside the proved cases
};

/// Throws Error(ShapeViolation) naming the first violated condition.
void validate(const Figure6Shape& shape);
void validate(const Figure8Shape& shape);

/// Every (chain, attachment, end) whose induced data matches C_p and passes
/// validate().
std::vector<Figure6Shape> find_cp_chains(const HandleDecomposition& x, int p);
/// Every (cusp, attachment) pair passing validate().
std::vector<Figure8Shape> find_cusps(const HandleDecomposition& x);

struct SurgeryResult {
  HandleDecomposition result;
  Certificate certificate;
};

/// Replaces the chain by B_p (one dotted circle, one 2-handle running over it
/// p times), turns the attachment into a meridian of the new dotted circle and
/// cancels the pair. The surviving B_p handle takes the attachment's label and
/// has Unknown framing. Handles that linked the chain are re-routed through
/// B_p, so their linking data becomes Unknown.
SurgeryResult rational_blowdown(const Figure6Shape& shape);

/// Multiplicity-p logarithmic transform in the cusp neighborhood: p-1
/// (-1)-blow-ups, slides assembling C_p from the cusp and exceptional
/// handles, then rational_blowdown.
SurgeryResult log_transform(const Figure8Shape& shape, int p);

/// Certificate-level model of E(n)_p: one 0-handle, 12n 2-handles (a
/// 0-framed right trefoil "cusp", an attachment "att" linking it once, and
/// 12n-2 handles k1... with Unknown data), two 3-handles and one 4-handle.
/// p outside {2, 3, 4} needs allow_conjectural and marks the shape.
Figure8Shape elliptic_en_p(int n, int p, bool allow_conjectural = false);

bool is_proved_pair(int p, int q);

/// Builds E(n)_p, applies the multiplicity-q transform and certifies the
/// handle counts (1, 0, 12n, 2, 1), trivial H_1 and chi = 12n. Pairs outside
/// (2,3), (2,5), (3,4), (4,5) need allow_unsupported and yield a conjectural
/// certificate.
Certificate verify_main_theorem(int n, int p, int q, bool allow_unsupported = false);

/// verify_main_theorem over n = 1..max_n and the four proved pairs, ordered
/// by (n, p, q). Grid points are evaluated concurrently.
std::vector<Certificate> verify_all_proved(int max_n);

}  // namespace kirby
