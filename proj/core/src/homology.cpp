#include "primdec/homology.hpp"

#include "primdec/error.hpp"
#include "primdec/primdec.hpp"

namespace primdec {

namespace {

int nvars(const Submodule& m) { return m.ring()->nvars(); }

// Columns of k reduced modulo the span of `image`, zero columns dropped.
Submodule reduce_columns(const Submodule& k, const Submodule& image) {
  GroebnerBasis gb = buchberger(image);
  Submodule out(k.ring(), k.rank());
  for (const auto& g : k.gens()) {
    FreeElement r = normal_form(g, gb);
    if (!r.is_zero()) out.add(std::move(r));
  }
  return out;
}

// Map F_{i+1} -> F_i of the Singular-style 1-based index i, i.e. F[i].
const Submodule& at(const Resolution& r, int i) { return r.maps[static_cast<std::size_t>(i - 1)]; }

// Dual of the cocycles at F_c together with the coboundaries they are taken modulo.
std::pair<Submodule, Submodule> cocycles(const Resolution& f, int c) {
  Submodule k = syzygies(transpose(at(f, c + 1)));
  if (c == 0) return {k, Submodule(k.ring(), k.rank())};
  Submodule image = transpose(at(f, c));
  return {reduce_columns(k, image), image};
}

}  // namespace

std::size_t Resolution::rank(std::size_t i) const {
  if (i < maps.size()) return maps[i].rank();
  if (i == maps.size() && !maps.empty()) return maps.back().ncols();
  throw InvalidArgument("resolution index out of range");
}

Resolution free_resolution(const Submodule& m, int length) {
  if (length < 1) throw InvalidArgument("free_resolution: length must be at least 1");
  Resolution r;
  r.maps.push_back(prune_generators(m));
  for (int i = 1; i < length; ++i) r.maps.push_back(prune_generators(syzygies(r.maps.back())));
  return r;
}

bool ExtPresentation::is_zero() const {
  return generators.ncols() == 0 || buchberger(presentation).is_whole_module();
}

ExtPresentation ext_module(int c, const Submodule& m) {
  if (c < 0 || c > nvars(m)) throw InvalidArgument("ext_module: index out of range");
  Resolution f = free_resolution(m, c + 1);
  auto [k, image] = cocycles(f, c);
  Submodule pres = modulo_kernel(k, image);
  return ExtPresentation{c, std::move(k), std::move(pres)};
}

Submodule prune_presentation(const Submodule& presentation) {
  const RingPtr& ring = presentation.ring();
  std::vector<FreeElement> cols;
  for (const auto& g : presentation.gens())
    if (!g.is_zero()) cols.push_back(g);
  std::size_t rank = presentation.rank();
  for (;;) {
    std::size_t pivot_col = cols.size(), pivot_row = 0;
    for (std::size_t j = 0; j < cols.size() && pivot_col == cols.size(); ++j)
      for (std::size_t r = 0; r < rank; ++r)
        if (cols[j][r].is_constant() && !cols[j][r].is_zero()) {
          pivot_col = j;
          pivot_row = r;
          break;
        }
    if (pivot_col == cols.size()) break;
    FreeElement pivot = cols[pivot_col].scaled(1 / cols[pivot_col][pivot_row].leading_coeff());
    std::vector<FreeElement> next;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (j == pivot_col) continue;
      FreeElement v = cols[j];
      if (!v[pivot_row].is_zero()) v = v - pivot.scaled(v[pivot_row]);
      std::vector<Polynomial> comps;
      for (std::size_t r = 0; r < rank; ++r)
        if (r != pivot_row) comps.push_back(v[r]);
      FreeElement w(ring, std::move(comps));
      if (!w.is_zero()) next.push_back(std::move(w));
    }
    cols = std::move(next);
    --rank;
  }
  return Submodule(ring, rank, std::move(cols));
}

Ideal ext_annihilator(int c, const Submodule& m) {
  ExtPresentation e = ext_module(c, m);
  if (e.generators.ncols() == 0) return Submodule::unit_ideal(m.ring());
  Submodule pruned = prune_presentation(e.presentation);
  if (pruned.rank() == 0) return Submodule::unit_ideal(m.ring());
  return canonical(annihilator(pruned));
}

CanonMapResult canon_map(const Submodule& m) {
  int dim = krull_dim(m);
  if (dim < 0) throw InvalidArgument("canon_map: the module is the whole free module");
  int c = nvars(m) - dim;
  if (c == 0) {
    Submodule k = syzygies(transpose(m));
    Submodule ke = syzygies(transpose(k));
    Submodule co = modulo_kernel(syzygies(transpose(syzygies(k))), transpose(k));
    Submodule kp = modulo_kernel(ke, m);
    return CanonMapResult{c, std::move(ke), std::move(kp), std::move(co)};
  }
  Resolution f = free_resolution(m, c + 1);
  auto [k, image] = cocycles(f, c);
  Submodule a = modulo_kernel(k, image);
  Resolution g = free_resolution(a, c + 1);
  // Lift the cocycles down the first resolution along the second one.
  for (int i = 1; i <= c; ++i) k = lift(transpose(at(f, c - i + 1)), multiply(k, at(g, i)));
  Submodule gc = transpose(at(g, c));
  Submodule ke = modulo_kernel(transpose(k), gc);
  Submodule co = modulo_kernel(syzygies(transpose(at(g, c + 1))), sum(transpose(k), gc));
  Submodule kp = modulo_kernel(ke, m);
  return CanonMapResult{c, std::move(ke), std::move(kp), std::move(co)};
}

Submodule equidim_hull(const Submodule& m) { return canonical(canon_map(m).kernel_preimage); }

Submodule rem_comp(const Submodule& m, int dim) {
  int n = nvars(m);
  if (dim < 0 || dim > n) throw InvalidArgument("rem_comp: dimension out of range");
  Submodule acc = canonical(m);
  // A prime of codimension b > n - dim contains I_b; saturating by I_b removes
  // exactly the components whose primes contain it.
  for (int b = n; b > n - dim; --b) {
    Ideal ib = ext_annihilator(b, m);
    if (codim(ib) == b) acc = saturate(acc, ib).module;
  }
  return canonical(acc);
}

Ideal ass_prim_codim(const Submodule& m, int c) {
  if (c < 0 || c > nvars(m)) throw InvalidArgument("ass_prim_codim: codimension out of range");
  Ideal ic = ext_annihilator(c, m);
  if (codim(ic) > c) return Submodule::unit_ideal(m.ring());
  return equidim_hull(ic);
}

Ideal inter_ass_prim(const Submodule& m, int c) {
  if (c < 0 || c > nvars(m)) throw InvalidArgument("inter_ass_prim: codimension out of range");
  Ideal ic = ext_annihilator(c, m);
  if (codim(ic) != c) return Submodule::unit_ideal(m.ring());
  return radical_equidim(equidim_hull(ic));
}

}  // namespace primdec
