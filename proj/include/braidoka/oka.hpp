#pragma once

// Decision procedures for monodromy homomorphisms of surfaces: the E0 test for
// maps into B3 and the peripheral/sphere classification for maps into
// F2 = π1(C \ {-1, 1}).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidoka/braid.hpp"
#include "braidoka/words.hpp"

namespace braidoka {

struct SurfaceSignature {
  int genus = 0;
  int holes = 1;
  // Rank 2g + m - 1 of the free fundamental group.
  int rank() const { return 2 * genus + holes - 1; }
  friend bool operator==(const SurfaceSignature&, const SurfaceSignature&) = default;
};

enum class HomTarget { BraidB3, FreeF2 };
std::string to_string(HomTarget t);

// Generator images, index 0 holding the image of e1. Missing images are the
// identity.
struct SurfaceHom {
  SurfaceSignature signature;
  HomTarget target = HomTarget::BraidB3;
  std::vector<BraidWord> braid_images;
  std::vector<FreeWord> free_images;

  // {"genus":1,"holes":1,"target":"B3","images":{"e1":"-2 1","e2":"2 -1"}}
  static SurfaceHom from_json(const std::string& text);

  BraidWord eval_braid(const FreeWord& w) const;
  FreeWord eval_free(const FreeWord& w) const;
};

// {e1, e2, e2 e1^-1, e2 e1^-2, [e1, e2]}; the mirrored variant swaps the
// roles of e1 and e2 in the middle two entries.
std::vector<FreeWord> e0_set(bool mirrored = false);

enum class Oka3Type { PeriodicSigma12, PeriodicDelta, ReducibleSigma1Delta2 };
std::string to_string(Oka3Type t);

struct Oka3Verdict {
  bool classified = false;
  Oka3Type type = Oka3Type::PeriodicSigma12;  // when classified
  // Violation: first element of E0 whose image has positive entropy.
  std::size_t witness_index = 0;
  FreeWord witness;
  BraidWord witness_image;
  double entropy = 0.0;

  friend bool operator==(const Oka3Verdict& a, const Oka3Verdict& b) {
    return a.classified == b.classified &&
           (a.classified ? a.type == b.type : a.witness == b.witness && a.witness_image == b.witness_image);
  }
};

// Throws WrongSignature unless (g, m) = (1, 1), WrongTarget unless the target is
// B3, and TheoremContradiction if every E0 image has zero entropy while the
// generator images fail to commute.
Oka3Verdict oka3_decide(const SurfaceHom& phi, bool mirrored = false);

struct EPrimeElement {
  FreeWord word;  // over e1..e_x; for g = 0 the virtual e_m is expanded
  std::string tag;
  std::string label;  // readable form using e_m where it occurs
};

struct EPrimeSet {
  SurfaceSignature signature;
  std::vector<EPrimeElement> elements;
  std::size_t size() const { return elements.size(); }
};

// Throws DegenerateSignature for (0, 1) and for invalid (g, m).
EPrimeSet eprime_generate(const SurfaceSignature& sig);
// The element count predicted by the closed-form tally for (g, m).
std::int64_t eprime_count_formula(const SurfaceSignature& sig);

enum class GOKind { GOReducible, GOSphereHolomorphic, NotGOSphereAntiholomorphic, NotGO };
std::string to_string(GOKind k);

struct GOVerdict {
  GOKind kind = GOKind::NotGO;

  // GOReducible: every generator image is root^power.
  bool trivial_image = false;
  FreeWord root;
  Peripheral peripheral = Peripheral::A1;
  std::int64_t root_peripheral_power = 0;  // root is conjugate to peripheral^this (±1)
  std::vector<std::int64_t> generator_powers;

  // Sphere cases: boundary indices (1-based, e_m included) with nontrivial
  // monodromy and their peripheral types.
  std::array<int, 3> triple{};
  std::array<Peripheral, 3> triple_peripherals{};

  // NotGO
  std::optional<EPrimeElement> witness;
  FreeWord witness_image;
  std::string reason;
};

// Throws WrongTarget unless the target is F2; TheoremContradiction if a
// positive-genus map passes every E' test, has a nontrivial handle image and
// still has non-cyclic image.
GOVerdict go_surface_decide(const SurfaceHom& h);

}  // namespace braidoka
