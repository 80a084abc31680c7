#include "braidoka/oka.hpp"

#include <cstdlib>

#include <json.hpp>

#include "braidoka/error.hpp"
#include "braidoka/sl2z.hpp"
#include "braidoka/three.hpp"
#include "text_util.hpp"

namespace braidoka {

std::string to_string(HomTarget t) { return t == HomTarget::BraidB3 ? "B3" : "F2"; }

SurfaceHom SurfaceHom::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(detail::normalize_minus(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("homomorphism JSON: ") + e.what());
  }
  SurfaceHom h;
  try {
    h.signature.genus = j.at("genus").get<int>();
    h.signature.holes = j.at("holes").get<int>();
    const auto target = j.value("target", std::string("B3"));
    if (target == "B3" || target == "BraidB3")
      h.target = HomTarget::BraidB3;
    else if (target == "F2" || target == "FreeF2")
      h.target = HomTarget::FreeF2;
    else
      throw Error(ErrorCode::ParseError, "unknown target '" + target + "'");
    if (h.signature.genus < 0 || h.signature.holes < 1)
      throw Error(ErrorCode::ParseError, "genus must be >= 0 and holes >= 1");
    const int x = h.signature.rank();
    if (h.target == HomTarget::BraidB3)
      h.braid_images.assign(static_cast<std::size_t>(x), BraidWord(3));
    else
      h.free_images.assign(static_cast<std::size_t>(x), FreeWord());
    if (j.contains("images")) {
      for (const auto& [key, val] : j.at("images").items()) {
        if (key.size() < 2 || key[0] != 'e')
          throw Error(ErrorCode::ParseError, "image key '" + key + "' is not e<k>");
        const auto idx = detail::parse_int(std::string_view(key).substr(1), "image key");
        if (idx < 1 || idx > x)
          throw Error(ErrorCode::ParseError, "image key '" + key + "' outside e1..e" + std::to_string(x));
        const auto word = val.get<std::string>();
        if (h.target == HomTarget::BraidB3)
          h.braid_images[static_cast<std::size_t>(idx - 1)] = BraidWord::parse(word, 3);
        else
          h.free_images[static_cast<std::size_t>(idx - 1)] = reduce(FreeWord::parse(word));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("homomorphism JSON: ") + e.what());
  }
  return h;
}

BraidWord SurfaceHom::eval_braid(const FreeWord& w) const {
  BraidWord out(3);
  for (const auto& blk : w.blocks()) {
    if (blk.gen > static_cast<int>(braid_images.size()))
      throw Error(ErrorCode::InvalidArgument, "generator e" + std::to_string(blk.gen) + " has no image");
    out = out * braid_images[static_cast<std::size_t>(blk.gen - 1)].pow(blk.exp);
  }
  return out;
}

FreeWord SurfaceHom::eval_free(const FreeWord& w) const {
  FreeWord out;
  for (const auto& blk : w.blocks()) {
    if (blk.gen > static_cast<int>(free_images.size()))
      throw Error(ErrorCode::InvalidArgument, "generator e" + std::to_string(blk.gen) + " has no image");
    out = out * power(free_images[static_cast<std::size_t>(blk.gen - 1)], blk.exp);
  }
  return out;
}

std::vector<FreeWord> e0_set(bool mirrored) {
  const int p = mirrored ? 1 : 2;  // the generator that leads the middle entries
  const int q = 3 - p;
  const auto e1 = FreeWord::generator(1), e2 = FreeWord::generator(2);
  return {e1, e2, FreeWord({{p, 1}, {q, -1}}), FreeWord({{p, 1}, {q, -2}}), commutator(e1, e2)};
}

std::string to_string(Oka3Type t) {
  switch (t) {
    case Oka3Type::PeriodicSigma12: return "PeriodicSigma12";
    case Oka3Type::PeriodicDelta: return "PeriodicDelta";
    case Oka3Type::ReducibleSigma1Delta2: return "ReducibleSigma1Delta2";
  }
  return "?";
}

Oka3Verdict oka3_decide(const SurfaceHom& phi, bool mirrored) {
  if (phi.signature != SurfaceSignature{1, 1})
    throw Error(ErrorCode::WrongSignature, "oka3 needs genus 1 with 1 hole");
  if (phi.target != HomTarget::BraidB3) throw Error(ErrorCode::WrongTarget, "oka3 needs images in B3");
  Oka3Verdict v;
  const auto e0 = e0_set(mirrored);
  for (std::size_t i = 0; i < e0.size(); ++i) {
    const auto img = phi.eval_braid(e0[i]);
    const auto t = theta(img).trace();
    if (t > 2 || t < -2) {
      v.witness_index = i;
      v.witness = e0[i];
      v.witness_image = img;
      v.entropy = entropy_from_trace(t);
      return v;
    }
  }
  const auto& b1 = phi.braid_images[0];
  const auto& b2 = phi.braid_images[1];
  if (!braid_eq(b1 * b2, b2 * b1))
    throw Error(ErrorCode::TheoremContradiction,
                "zero entropy on E0 but [" + b1.str() + ", " + b2.str() + "] != id");
  v.classified = true;
  if (permutation(b1).is_full_cycle() || permutation(b2).is_full_cycle())
    v.type = Oka3Type::PeriodicSigma12;
  else if (theta(b1).trace() == 0 || theta(b2).trace() == 0)
    v.type = Oka3Type::PeriodicDelta;
  else
    v.type = Oka3Type::ReducibleSigma1Delta2;
  return v;
}

// ---------------------------------------------------------------------------

namespace {

void check_signature(const SurfaceSignature& sig) {
  if (sig.genus < 0 || sig.holes < 1)
    throw Error(ErrorCode::DegenerateSignature, "need genus >= 0 and holes >= 1");
  if (sig.genus == 0 && sig.holes == 1) throw Error(ErrorCode::DegenerateSignature, "the disc has trivial π1");
}

struct Builder {
  const SurfaceSignature& sig;
  std::vector<EPrimeElement>& out;

  // Generator index k, where k = m for g = 0 means (e1 ... e_{m-1})^-1.
  FreeWord gen(int k) const {
    if (sig.genus == 0 && k == sig.holes) {
      FreeWord prod;
      for (int j = 1; j < sig.holes; ++j) prod = prod * FreeWord::generator(j);
      return prod.inverse();
    }
    return FreeWord::generator(k);
  }

  // Product of gen(k)^exp over the given factors.
  void add(const std::vector<std::pair<int, int>>& factors, const std::string& tag) {
    FreeWord w;
    std::string label;
    for (const auto& [k, e] : factors) {
      w = w * power(gen(k), e);
      if (!label.empty()) label += ' ';
      label += "e" + std::to_string(k);
      if (e != 1) label += "^" + std::to_string(e);
    }
    out.push_back({w, tag, label});
  }
};

}  // namespace

EPrimeSet eprime_generate(const SurfaceSignature& sig) {
  check_signature(sig);
  EPrimeSet set;
  set.signature = sig;
  Builder b{sig, set.elements};
  const int g = sig.genus, m = sig.holes, x = sig.rank();

  if (g == 0) {
    if (m == 2) {
      b.add({{1, 1}}, "hole-generator");
      return set;
    }
    for (int i = 1; i <= m; ++i) b.add({{i, 1}}, "hole-generator");
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) b.add({{i, 1}, {j, 1}}, "pair-product");
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j)
        for (int k = j + 1; k <= m; ++k) b.add({{i, 1}, {j, 1}, {k, 1}}, "triple-product");
    return set;
  }

  for (int j = 1; j <= g; ++j) {
    b.add({{2 * j - 1, 1}}, "handle-generator");
    b.add({{2 * j, 1}}, "handle-generator");
    b.add({{2 * j - 1, 1}, {2 * j, 1}, {2 * j - 1, -1}, {2 * j, -1}}, "commutator");
  }
  for (int l = 1; l <= m - 1; ++l) b.add({{2 * g + l, 1}}, "hole-generator");
  auto handle_pair = [&](int i, int k) { return i % 2 == 1 && k == i + 1 && k <= 2 * g; };
  for (int i = 1; i <= x; ++i)
    for (int k = i + 1; k <= x; ++k)
      if (!handle_pair(i, k)) b.add({{i, 1}, {k, 1}}, "pair-product");
  for (int j = 1; j <= g; ++j) {
    const int p = 2 * j - 1, q = 2 * j;
    for (int o = 1; o <= x; ++o) {
      if (o == p || o == q) continue;
      b.add({{p, 2}, {q, 1}, {o, 1}}, "handle-mix");
      b.add({{p, 3}, {q, 1}, {o, 1}}, "handle-mix");
      b.add({{p, 1}, {q, 2}, {o, 1}}, "handle-mix");
      b.add({{p, 1}, {q, 3}, {o, 1}}, "handle-mix");
    }
  }
  if (m > 2) {
    for (int i = 2 * g + 1; i <= x; ++i)
      for (int k = i + 1; k <= x; ++k) b.add({{i, 1}, {1, 1}, {i, 1}, {2, 1}, {k, 1}}, "hole-pattern");
  }
  return set;
}

std::int64_t eprime_count_formula(const SurfaceSignature& sig) {
  check_signature(sig);
  const std::int64_t g = sig.genus, m = sig.holes, x = sig.rank();
  if (g == 0) {
    if (m == 2) return 1;
    return m + m * (m - 1) / 2 + m * (m - 1) * (m - 2) / 6;
  }
  std::int64_t n = x + g + x * (x - 1) / 2 - g + 4 * g * (x - 2);
  if (m > 2) n += (m - 1) * (m - 2) / 2;
  return n;
}

// ---------------------------------------------------------------------------

std::string to_string(GOKind k) {
  switch (k) {
    case GOKind::GOReducible: return "GOReducible";
    case GOKind::GOSphereHolomorphic: return "GOSphereHolomorphic";
    case GOKind::NotGOSphereAntiholomorphic: return "NotGOSphereAntiholomorphic";
    case GOKind::NotGO: return "NotGO";
  }
  return "?";
}

namespace {

// Common primitive root of all nontrivial images, if they commute pairwise.
// Elements of a free group commute iff they are powers of one primitive root.
bool common_root(const std::vector<FreeWord>& images, FreeWord& root, std::vector<std::int64_t>& powers) {
  root = FreeWord();
  powers.assign(images.size(), 0);
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].empty()) continue;
    const auto pr = primitive_root(images[i]);
    if (root.empty()) {
      root = pr.root;
      powers[i] = pr.power;
    } else if (pr.root == root) {
      powers[i] = pr.power;
    } else if (pr.root == root.inverse()) {
      powers[i] = -pr.power;
    } else {
      return false;
    }
  }
  return true;
}

}  // namespace

GOVerdict go_surface_decide(const SurfaceHom& h) {
  if (h.target != HomTarget::FreeF2) throw Error(ErrorCode::WrongTarget, "go-surface needs images in F2");
  const auto& sig = h.signature;
  GOVerdict v;

  // 1. Every E' element must map to a peripheral class.
  const auto eprime = eprime_generate(sig);
  for (const auto& el : eprime.elements) {
    const auto img = h.eval_free(el.word);
    if (!is_conjugate_into_peripheral(img)) {
      v.kind = GOKind::NotGO;
      v.witness = el;
      v.witness_image = img;
      v.reason = "image of " + el.label + " is not conjugate into a peripheral subgroup";
      return v;
    }
  }

  // 2. Cyclic image generated by a peripheral element.
  FreeWord root;
  std::vector<std::int64_t> powers;
  if (common_root(h.free_images, root, powers)) {
    if (root.empty()) {
      v.kind = GOKind::GOReducible;
      v.trivial_image = true;
      v.generator_powers = powers;
      return v;
    }
    if (const auto pm = is_conjugate_into_peripheral(root)) {
      v.kind = GOKind::GOReducible;
      v.root = root;
      v.peripheral = pm->peripheral;
      v.root_peripheral_power = pm->power;
      v.generator_powers = powers;
      return v;
    }
  }

  if (sig.genus > 0) {
    for (int j = 1; j <= 2 * sig.genus; ++j)
      if (!h.free_images[static_cast<std::size_t>(j - 1)].empty())
        throw Error(ErrorCode::TheoremContradiction,
                    "all E' images peripheral but the image is not cyclic on a surface of positive genus");
    v.kind = GOKind::NotGO;
    v.reason = "image is not cyclic and the surface has positive genus";
    return v;
  }

  // 3. Sphere with holes: the boundary monodromies m_1..m_m, the last one
  // being the image of (e1 ... e_{m-1})^-1.
  const int m = sig.holes;
  std::vector<FreeWord> mono;
  FreeWord prod;
  for (int i = 0; i < m - 1; ++i) {
    mono.push_back(h.free_images[static_cast<std::size_t>(i)]);
    prod = prod * mono.back();
  }
  mono.push_back(prod.inverse());

  std::vector<int> nontrivial;
  for (int i = 0; i < m; ++i)
    if (!mono[static_cast<std::size_t>(i)].empty()) nontrivial.push_back(i);
  if (nontrivial.size() != 3) {
    v.kind = GOKind::NotGO;
    v.reason = std::to_string(nontrivial.size()) + " nontrivial boundary monodromies, expected 3";
    return v;
  }
  int sign = 0;
  for (int s = 0; s < 3; ++s) {
    const int i = nontrivial[static_cast<std::size_t>(s)];
    const auto pm = is_conjugate_into_peripheral(mono[static_cast<std::size_t>(i)]);
    if (!pm || std::llabs(pm->power) != 1) {
      v.kind = GOKind::NotGO;
      v.witness_image = mono[static_cast<std::size_t>(i)];
      v.reason = "boundary monodromy " + std::to_string(i + 1) + " is not conjugate to a peripheral generator or its inverse";
      return v;
    }
    const int si = pm->power > 0 ? 1 : -1;
    if (sign != 0 && si != sign) {
      v.kind = GOKind::NotGO;
      v.reason = "boundary monodromies have mixed orientations";
      return v;
    }
    sign = si;
    v.triple[static_cast<std::size_t>(s)] = i + 1;
    v.triple_peripherals[static_cast<std::size_t>(s)] = pm->peripheral;
  }
  // Nielsen: u, v form a basis of F2 iff [u, v] is conjugate to [a1, a2]^±1.
  const auto& u = mono[static_cast<std::size_t>(nontrivial[0])];
  const auto& w = mono[static_cast<std::size_t>(nontrivial[1])];
  const auto c = commutator(u, w);
  const auto std_c = commutator(FreeWord::generator(1), FreeWord::generator(2));
  if (!free_conjugate(c, std_c) && !free_conjugate(c, std_c.inverse())) {
    v.kind = GOKind::NotGO;
    v.reason = "boundary monodromies do not generate F2";
    return v;
  }
  v.kind = sign > 0 ? GOKind::GOSphereHolomorphic : GOKind::NotGOSphereAntiholomorphic;
  return v;
}

}  // namespace braidoka
