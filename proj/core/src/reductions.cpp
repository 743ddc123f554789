#include "incwb/reductions.hpp"

#include <algorithm>

#include "incwb/rng.hpp"

namespace incwb::reductions {

PairingScheme::PairingScheme(std::size_t kappa) : kappa_(kappa) {
  if (kappa == 0) throw InputError("pairing scheme needs positive kappa");
}

std::size_t PairingScheme::pair(std::size_t zeta, std::size_t eps) const {
  if (zeta >= kappa_ || eps >= kappa_) throw InputError("pair argument out of range");
  return zeta * kappa_ + eps;
}

std::pair<std::size_t, std::size_t> PairingScheme::unpair(std::size_t colour) const {
  if (colour >= colours()) throw InputError("colour outside the pairing codomain");
  return {colour / kappa_, colour % kappa_};
}

RelationSystem family_to_system(const FunctionFamily& fam, const std::vector<MemberId>& base) {
  if (!is_permutation_of_range(base, fam.size())) throw InputError("base order must list every member once");
  std::vector<std::string> names;
  for (MemberId f = 0; f < fam.size(); ++f) names.push_back(FunctionFamily::member_name(f));
  std::vector<std::vector<relsys::Pair>> rel(fam.kappa());
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = i + 1; j < base.size(); ++j) {
      const auto& f = fam.member(base[i]);
      const auto& g = fam.member(base[j]);
      for (std::size_t eps = 0; eps < fam.kappa(); ++eps)
        if (f[eps] == g[eps]) rel[eps].emplace_back(base[i], base[j]);
    }
  }
  return RelationSystem(std::move(names), fam.kappa(), std::move(rel));
}

relsys::FreenessWitness decomposition_to_witness(const FunctionFamily& fam, const famfun::FreeDecomposition& decomp,
                                                 const std::vector<MemberId>& base, const PairingScheme& scheme) {
  if (!is_permutation_of_range(base, fam.size())) throw InputError("base order must list every member once");
  if (scheme.kappa() != fam.kappa()) throw InputError("pairing scheme and family disagree on kappa");
  if (decomp.pieces.size() > fam.kappa()) throw InputError("decomposition has more than kappa pieces");
  std::vector<MemberId> covered;
  for (const auto& p : decomp.pieces) covered.insert(covered.end(), p.begin(), p.end());
  std::sort(covered.begin(), covered.end());
  if (!famfun::is_valid_decomposition(fam, covered, decomp)) throw InputError("invalid free decomposition");

  relsys::FreenessWitness w;
  for (std::size_t zeta = 0; zeta < decomp.pieces.size(); ++zeta) {
    for (MemberId f : decomp.pieces[zeta]) {
      const auto value = decomp.transversals[zeta].choice.at(f);
      const auto& t = fam.member(f);
      const auto eps = static_cast<std::size_t>(std::find(t.begin(), t.end(), value) - t.begin());
      w.colour[f] = scheme.pair(zeta, eps);
    }
  }
  for (MemberId f : base)
    if (w.colour.count(f)) w.order.push_back(f);
  return w;
}

TransversalPartition witness_to_partition(const FunctionFamily& fam, const relsys::FreenessWitness& w,
                                          const std::vector<MemberId>& base, std::size_t colour_space) {
  const auto sys = family_to_system(fam, base);
  relsys::Subset dom;
  for (const auto& [f, c] : w.colour) dom.push_back(f);
  const auto verdict = relsys::verify_witness(sys, dom, w, {colour_space, true});
  if (!verdict.valid()) throw InputError("witness does not verify: " + verdict.violations.front().message);

  TransversalPartition out;
  const std::size_t kappa = fam.kappa();
  for (MemberId f : dom) {
    IndexSet u;
    for (MemberId g : dom)
      if (g != f && w.colour.at(g) == w.colour.at(f)) u |= sys.labels(g, f);
    if (u.size() >= kappa) {
      throw InputError("u_" + FunctionFamily::member_name(f) + " is all of kappa: witness verification is inconsistent");
    }
    std::size_t zeta = 0;
    while (u.contains(zeta)) ++zeta;
    out.coordinate[f] = zeta;
    const auto key = std::make_pair(w.colour.at(f), zeta);
    out.pieces[key].push_back(f);
    out.choices[key].choice[f] = fam.member(f)[zeta];
  }
  return out;
}

RelationSystem graph_to_system(const graph::Graph& g, const graph::NodeOrder& ord, std::size_t kappa) {
  if (ord.size() != g.size()) throw InputError("node order does not match the graph");
  std::vector<relsys::Pair> pairs;
  for (const auto& e : g.edges()) {
    if (ord.position(e.u) < ord.position(e.v)) {
      pairs.emplace_back(e.u, e.v);
    } else {
      pairs.emplace_back(e.v, e.u);
    }
  }
  return RelationSystem(g.names(), kappa, std::vector<std::vector<relsys::Pair>>(kappa, pairs));
}

DichotomyResult exp_dichotomy_check(const RelationSystem& sys, const std::vector<ExpSample>& samples) {
  for (std::size_t z = 1; z < sys.kappa(); ++z) {
    if (sys.relation(z) != sys.relation(0)) throw InputError("exp dichotomy needs identical relations");
  }
  DichotomyResult out;
  const IndexSet everything = IndexSet::full(sys.kappa());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (auto eta : samples[i].b) {
      const IndexSet ex = relsys::exp_set(sys, samples[i].b, eta, samples[i].w);
      ++out.exp_sets_checked;
      if (!ex.empty() && !(ex == everything)) {
        out.holds = false;
        out.counterexample = std::make_pair(i, eta);
        return out;
      }
    }
  }
  return out;
}

std::vector<ExpSample> random_exp_samples(const RelationSystem& sys, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<ExpSample> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    ExpSample x;
    for (relsys::ElementId e = 0; e < sys.size(); ++e)
      if (rng.chance(2, 3)) x.b.push_back(e);
    for (auto e : x.b) x.w.colour[e] = rng.below(sys.kappa());
    x.w.order = x.b;
    rng.shuffle(x.w.order);
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace incwb::reductions
