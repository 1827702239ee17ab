#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "giso/group.hpp"

namespace giso {

/// Group homomorphism G -> Sym(codomain), stored as (generator, image)
/// pairs. Internally every tracked element is a single permutation on the
/// disjoint union of domain and codomain (the shadow domain), so evaluation,
/// kernels and preimages of arbitrary members reduce to stabilizer-chain
/// lookups with a suitable base order.
class TrackedHom {
 public:
  TrackedHom(int domain_degree, int codomain_degree, std::vector<std::pair<Perm, Perm>> pairs)
      : dom_(domain_degree), cod_(codomain_degree), pairs_(std::move(pairs)),
        state_(std::make_shared<State>()) {
    std::vector<Perm> shadow_gens;
    for (const auto& [g, img] : pairs_) {
      if (g.degree() != dom_ || img.degree() != cod_)
        throw usage_error("TrackedHom: generator or image degree mismatch");
      shadow_gens.push_back(shadow(g, img));
    }
    shadow_group_ = PermGroup(dom_ + cod_, std::move(shadow_gens));
  }

  int domain_degree() const { return dom_; }
  int codomain_degree() const { return cod_; }
  const std::vector<std::pair<Perm, Perm>>& pairs() const { return pairs_; }

  PermGroup domain_group() const {
    std::vector<Perm> gens;
    for (const auto& [g, img] : pairs_) gens.push_back(g);
    return PermGroup(dom_, std::move(gens));
  }

  PermGroup image_group() const {
    std::vector<Perm> gens;
    for (const auto& [g, img] : pairs_) gens.push_back(img);
    return PermGroup(cod_, std::move(gens));
  }

  /// Image of an arbitrary member of the domain group.
  Perm evaluate(const Perm& g) const {
    if (g.degree() != dom_) throw usage_error("TrackedHom: evaluate degree mismatch");
    Perm w = witness(g);
    return cod_part(w);
  }

  /// Kernel {g | g^phi = id}.
  PermGroup kernel() const {
    const StabilizerChain& c = cod_first_chain();
    std::vector<Perm> gens;
    for (const Perm& s : c.tail_generators(cod_)) gens.push_back(dom_part(s));
    return PermGroup(dom_, std::move(gens));
  }

  /// Preimage of a single codomain element: (kernel, lift) or nullopt.
  std::optional<std::pair<PermGroup, Perm>> preimage(const Perm& tau) const {
    if (tau.degree() != cod_) throw usage_error("TrackedHom: preimage degree mismatch");
    std::optional<Perm> w = lift_opt(tau);
    if (!w) return std::nullopt;
    return std::make_pair(kernel(), *w);
  }

  /// Some domain element mapping to tau; throws empty_preimage if tau is not
  /// in the image.
  Perm lift(const Perm& tau) const {
    std::optional<Perm> w = lift_opt(tau);
    if (!w) throw empty_preimage("TrackedHom: element not in image");
    return *w;
  }

  /// Preimage of a subgroup of the image, as generators: kernel generators
  /// plus one lift per subgroup generator.
  PermGroup preimage_subgroup(const PermGroup& h) const {
    if (h.degree() != cod_) throw usage_error("TrackedHom: preimage_subgroup degree mismatch");
    std::vector<Perm> gens = kernel().generators();
    for (const Perm& t : h.generators()) gens.push_back(lift(t));
    return PermGroup(dom_, std::move(gens));
  }

  const PermGroup& shadow_group() const { return shadow_group_; }

  Perm shadow(const Perm& g, const Perm& img) const {
    std::vector<Point> tab(dom_ + cod_);
    for (Point p = 0; p < dom_; ++p) tab[p] = g[p];
    for (Point p = 0; p < cod_; ++p) tab[dom_ + p] = dom_ + img[p];
    return Perm(std::move(tab));
  }

  Perm dom_part(const Perm& s) const {
    std::vector<Point> tab(dom_);
    for (Point p = 0; p < dom_; ++p) tab[p] = s[p];
    return Perm(std::move(tab));
  }

  Perm cod_part(const Perm& s) const {
    std::vector<Point> tab(cod_);
    for (Point p = 0; p < cod_; ++p) tab[p] = s[dom_ + p] - dom_;
    return Perm(std::move(tab));
  }

 private:
  const StabilizerChain& dom_first_chain() const {
    std::call_once(state_->dom_once, [this] {
      std::vector<Point> base;
      for (Point p = 0; p < dom_; ++p) base.push_back(p);
      state_->dom_first = std::make_unique<StabilizerChain>(
          dom_ + cod_, shadow_group_.generators(), base);
    });
    return *state_->dom_first;
  }

  const StabilizerChain& cod_first_chain() const {
    std::call_once(state_->cod_once, [this] {
      std::vector<Point> base;
      for (Point p = 0; p < cod_; ++p) base.push_back(dom_ + p);
      state_->cod_first = std::make_unique<StabilizerChain>(
          dom_ + cod_, shadow_group_.generators(), base);
    });
    return *state_->cod_first;
  }

  /// Shadow element whose domain part equals g; throws if g is not a member.
  Perm witness(const Perm& g) const {
    const StabilizerChain& c = dom_first_chain();
    Perm residual = g;
    Perm w = Perm::identity(dom_ + cod_);
    for (std::size_t i = 0; i < static_cast<std::size_t>(dom_) && i < c.levels().size(); ++i) {
      Point b = c.levels()[i].base_point;  // a domain point by construction
      Point t = residual[b];
      auto it = c.levels()[i].transversal.find(t);
      if (it == c.levels()[i].transversal.end())
        throw usage_error("TrackedHom: element is not in the domain group");
      residual = residual * dom_part(it->second).inverse();
      w = it->second * w;
    }
    if (!residual.is_identity())
      throw usage_error("TrackedHom: element is not in the domain group");
    return w;
  }

  /// Shadow element whose codomain part equals tau, if any.
  std::optional<Perm> lift_opt(const Perm& tau) const {
    const StabilizerChain& c = cod_first_chain();
    Perm residual = tau;
    Perm w = Perm::identity(dom_ + cod_);
    for (std::size_t i = 0; i < static_cast<std::size_t>(cod_) && i < c.levels().size(); ++i) {
      Point b = c.levels()[i].base_point - dom_;  // codomain point
      Point t = residual[b];
      auto it = c.levels()[i].transversal.find(t + dom_);
      if (it == c.levels()[i].transversal.end()) return std::nullopt;
      residual = residual * cod_part(it->second).inverse();
      w = it->second * w;
    }
    if (!residual.is_identity()) return std::nullopt;
    return dom_part(w);
  }

  struct State {
    std::once_flag dom_once, cod_once;
    std::unique_ptr<StabilizerChain> dom_first, cod_first;
  };

  int dom_;
  int cod_;
  std::vector<std::pair<Perm, Perm>> pairs_;
  PermGroup shadow_group_;
  std::shared_ptr<State> state_;
};

/// Restriction action of G on an invariant subset, as a tracked hom onto
/// Sym(window) with the window reindexed in ascending order.
inline TrackedHom restriction_hom(const PermGroup& g, const std::vector<Point>& window) {
  std::vector<Point> idx(g.degree(), -1);
  for (std::size_t i = 0; i < window.size(); ++i) idx[window[i]] = static_cast<Point>(i);
  std::vector<std::pair<Perm, Perm>> pairs;
  for (const Perm& s : g.generators()) {
    std::vector<Point> img(window.size());
    for (std::size_t i = 0; i < window.size(); ++i) {
      Point t = s[window[i]];
      if (t < 0 || idx[t] < 0) throw usage_error("restriction_hom: window is not invariant");
      img[i] = idx[t];
    }
    pairs.emplace_back(s, Perm(std::move(img)));
  }
  return TrackedHom(g.degree(), static_cast<int>(window.size()), std::move(pairs));
}

}  // namespace giso
