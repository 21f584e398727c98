#include "hyperlat/interfaces.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "hyperlat/errors.hpp"
#include "hyperlat/isoperimetry.hpp"

namespace hyperlat {

namespace {

// Any component the removed set pins in place fits under this budget: the
// degree-6 disc bound n^2/12 + n/2 + 1 and the square-lattice diamond
// n^2/8 - n/2 + 1 both stay below it, hyperbolic hosts trap far less. A
// component that outgrows the budget is therefore on the far side.
int64_t enclosure_budget(int64_t n) { return n * n / 8 + n + 8; }

// Budget for the boundary pass. On triangulations the disc bound is exact,
// so an overflow of the inner component is a genuine violation, not noise.
int64_t core_budget(const Ball& host, int64_t n) {
  return host.face_degree == 3 ? max_enclosed_volume(n) : enclosure_budget(n);
}

void check_regime(int32_t d, int32_t face_degree) {
  if (face_degree == 3 && d >= 6) return;
  if (face_degree == 4 && d >= 5) return;
  fail(ErrorCode::RegimeMismatch,
       "interface inequalities cover triangulations with d >= 6 and "
       "quadrangulations with d >= 5");
}

}  // namespace

bool ratio_check(int64_t m, int64_t b, int64_t b_core, int32_t d,
                 int32_t face_degree) {
  check_regime(d, face_degree);
  if (face_degree == 3) return (d - 5) * m <= 2 * b - b_core;
  int64_t q = int64_t(d - 4) * (d - 2) + (d - 3);
  return q * m <= (d - 2) * (2 * b - b_core);
}

bool alpha_check(int64_t m, int64_t b, int64_t b_core, int32_t d,
                 int32_t face_degree) {
  check_regime(d, face_degree);
  int32_t dd = face_degree == 3 ? d : d + 2;
  if (dd == 6) return b_core >= 0;
  return sign_alpha_comb(m + b - b_core, b_core, dd) <= 0;
}

bool combined_check(int64_t m, int64_t b, int32_t d, int32_t face_degree) {
  check_regime(d, face_degree);
  if (face_degree == 3) {
    if (d == 6) return 2 * b - m >= 0;
    return sign_alpha_comb((d - 4) * m - b, 2 * b - (d - 5) * m, d) <= 0;
  }
  int64_t q = int64_t(d - 4) * (d - 2) + (d - 3);
  int64_t a = ((d - 2) + q) * m - (d - 2) * b;
  int64_t c = 2 * (d - 2) * b - q * m;
  return sign_alpha_comb(a, c, d + 2) <= 0;
}

bool volume_check(int64_t volume, int64_t b) {
  return volume <= max_enclosed_volume(b);
}

InterfaceAnalyzer::InterfaceAnalyzer(const Ball& host) : host_(&host) {
  int32_t v = host.map.num_vertices();
  in_set_.assign(v, 0);
  set_slot_.assign(v, 0);
  visit_.assign(v, 0);
  comp_.assign(v, 0);
  taken_.assign(v, 0);
  max_layer_cluster_ = host.radius - 2;
  max_layer_boundary_ = host.radius - 1;
}

void InterfaceAnalyzer::stamp_set(const std::vector<Vertex>& a) {
  if (a.empty()) fail(ErrorCode::EmptySelection, "empty vertex selection");
  if (epoch_ >= std::numeric_limits<int32_t>::max() - 4) {
    std::fill(in_set_.begin(), in_set_.end(), 0);
    std::fill(visit_.begin(), visit_.end(), 0);
    std::fill(taken_.begin(), taken_.end(), 0);
    epoch_ = 0;
  }
  ++epoch_;
  int32_t v_count = host_->map.num_vertices();
  set_.assign(a.begin(), a.end());
  std::sort(set_.begin(), set_.end());
  for (size_t i = 0; i < set_.size(); ++i) {
    Vertex v = set_[i];
    if (v < 0 || v >= v_count)
      fail(ErrorCode::DomainError, "vertex id out of range");
    in_set_[v] = epoch_;
    set_slot_[v] = int32_t(i);
  }
}

void InterfaceAnalyzer::validate_set(int32_t max_layer, bool need_connected) {
  for (size_t i = 1; i < set_.size(); ++i)
    if (set_[i] == set_[i - 1])
      fail(ErrorCode::DomainError, "duplicate vertex in selection");
  for (Vertex v : set_)
    if (host_->layer[v] > max_layer)
      fail(ErrorCode::TooCloseToRim,
           "selection needs more room between it and the rim");
  if (!need_connected) return;
  const PlanarMap& g = host_->map;
  lmark_.assign(set_.size(), 0);
  bfs_.clear();
  bfs_.push_back(set_[0]);
  lmark_[0] = 1;
  size_t seen = 1, qh = 0;
  while (qh < bfs_.size()) {
    Vertex v = bfs_[qh++];
    for (Arc a = g.rot_begin(v); a < g.rot_end(v); ++a) {
      Vertex u = g.head(a);
      if (in_set_[u] != epoch_) continue;
      int32_t s = set_slot_[u];
      if (lmark_[s]) continue;
      lmark_[s] = 1;
      ++seen;
      bfs_.push_back(u);
    }
  }
  if (seen != set_.size())
    fail(ErrorCode::Disconnected, "selection is not connected");
}

void InterfaceAnalyzer::find_components(int64_t budget) {
  comps_.clear();
  comp_members_.clear();
  const PlanarMap& g = host_->map;
  for (Vertex c : set_) {
    for (Arc a = g.rot_begin(c); a < g.rot_end(c); ++a) {
      Vertex u = g.head(a);
      if (in_set_[u] == epoch_ || visit_[u] == epoch_) continue;
      int32_t id = int32_t(comps_.size());
      comps_.push_back(CompInfo{});
      CompInfo& ci = comps_.back();
      ci.attach_vertex = c;
      ci.attach_slot = int32_t(a - g.rot_begin(c));
      ci.members_off = int32_t(comp_members_.size());
      ci.members_len = 0;
      bfs_.clear();
      bfs_.push_back(u);
      visit_[u] = epoch_;
      comp_[u] = id;
      int64_t grabbed = 1;
      bool certain = g.on_outer_face(u);
      size_t qh = 0;
      while (qh < bfs_.size() && !certain) {
        Vertex v = bfs_[qh++];
        for (Arc e = g.rot_begin(v); e < g.rot_end(v); ++e) {
          Vertex w = g.head(e);
          if (in_set_[w] == epoch_) continue;
          if (visit_[w] == epoch_) {
            // only aborted sweeps leave reachable stamps: same far component
            if (comp_[w] != id) {
              certain = true;
              break;
            }
            continue;
          }
          visit_[w] = epoch_;
          comp_[w] = id;
          bfs_.push_back(w);
          ++grabbed;
          if (g.on_outer_face(w) || grabbed > budget) {
            certain = true;
            break;
          }
        }
      }
      if (certain) {
        ci.certain = 1;
        ci.exterior = 1;
      } else {
        ci.members_len = int32_t(bfs_.size());
        comp_members_.insert(comp_members_.end(), bfs_.begin(), bfs_.end());
      }
    }
  }
}

void InterfaceAnalyzer::build_local_submap() {
  const PlanarMap& g = host_->map;
  int32_t n = int32_t(set_.size());
  loff_.assign(n + 1, 0);
  lnbr_.clear();
  lslot_.clear();
  ltail_.clear();
  for (int32_t i = 0; i < n; ++i) {
    loff_[i] = int32_t(lnbr_.size());
    Vertex v = set_[i];
    for (Arc a = g.rot_begin(v); a < g.rot_end(v); ++a) {
      Vertex u = g.head(a);
      if (in_set_[u] != epoch_) continue;
      lnbr_.push_back(set_slot_[u]);
      lslot_.push_back(int32_t(a - g.rot_begin(v)));
      ltail_.push_back(i);
    }
  }
  loff_[n] = int32_t(lnbr_.size());
  int32_t na = loff_[n];
  ltwin_.assign(na, -1);
  for (int32_t t = 0; t < na; ++t) {
    if (ltwin_[t] >= 0) continue;
    int32_t u = ltail_[t], w = lnbr_[t];
    for (int32_t s = loff_[w]; s < loff_[w + 1]; ++s) {
      if (lnbr_[s] == u) {
        ltwin_[t] = s;
        ltwin_[s] = t;
        break;
      }
    }
  }
  lface_.assign(na, -1);
  lfaces_ = 0;
  for (int32_t a0 = 0; a0 < na; ++a0) {
    if (lface_[a0] >= 0) continue;
    int32_t f = lfaces_++;
    int32_t a = a0;
    do {
      lface_[a] = f;
      int32_t tw = ltwin_[a];
      int32_t v = ltail_[tw];
      int32_t nx = tw + 1;
      if (nx == loff_[v + 1]) nx = loff_[v];
      a = nx;
    } while (a != a0);
  }
  louter_ = -1;
}

// Face of the induced submap whose angular sector at c contains the host
// rotation slot host_slot (an arc leaving the set). The sector is delimited
// by the next in-set neighbor clockwise; the face left of that local arc is
// the one the sector opens into.
int32_t InterfaceAnalyzer::sector_face(Vertex c, int32_t host_slot) const {
  int32_t i = set_slot_[c];
  int32_t lo = loff_[i], hi = loff_[i + 1];
  for (int32_t s = lo; s < hi; ++s)
    if (lslot_[s] > host_slot) return lface_[s];
  return lface_[lo];
}

void InterfaceAnalyzer::classify_components() {
  louter_ = -1;
  for (const CompInfo& ci : comps_) {
    if (ci.certain) {
      louter_ = sector_face(ci.attach_vertex, ci.attach_slot);
      break;
    }
  }
  // with two layers of slack the far component always touches the set
  if (louter_ < 0)
    fail(ErrorCode::DomainError, "no escaping component next to the cluster");
  for (CompInfo& ci : comps_) {
    if (ci.certain) continue;
    ci.exterior =
        sector_face(ci.attach_vertex, ci.attach_slot) == louter_ ? 1 : 0;
  }
}

void InterfaceAnalyzer::pair_of(const std::vector<Vertex>& cluster,
                                std::vector<Vertex>& m_out,
                                std::vector<Vertex>& b_out, bool trusted) {
  stamp_set(cluster);
  if (!trusted) validate_set(max_layer_cluster_, true);
  const PlanarMap& g = host_->map;
  int32_t n = int32_t(set_.size());
  find_components(enclosure_budget(n));
  m_out.clear();
  b_out.clear();
  if (n == 1) {
    // one face around a single vertex: everything is on the far side
    for (CompInfo& ci : comps_) ci.exterior = 1;
    m_out.push_back(set_[0]);
  } else {
    build_local_submap();
    classify_components();
    lmark_.assign(n, 0);
    int32_t na = loff_[n];
    for (int32_t a = 0; a < na; ++a)
      if (lface_[a] == louter_) lmark_[ltail_[a]] = 1;
    for (int32_t i = 0; i < n; ++i)
      if (lmark_[i]) m_out.push_back(set_[i]);
  }
  for (Vertex c : set_) {
    for (Arc a = g.rot_begin(c); a < g.rot_end(c); ++a) {
      Vertex u = g.head(a);
      if (in_set_[u] == epoch_ || taken_[u] == epoch_) continue;
      if (!comps_[comp_[u]].exterior) continue;
      taken_[u] = epoch_;
      b_out.push_back(u);
    }
  }
  std::sort(b_out.begin(), b_out.end());
}

void InterfaceAnalyzer::last_filled(std::vector<Vertex>& filled_out) const {
  filled_out = set_;
  for (const CompInfo& ci : comps_) {
    if (ci.exterior) continue;
    filled_out.insert(filled_out.end(), comp_members_.begin() + ci.members_off,
                      comp_members_.begin() + ci.members_off + ci.members_len);
  }
  std::sort(filled_out.begin(), filled_out.end());
}

void InterfaceAnalyzer::filled_of(const std::vector<Vertex>& cluster,
                                  std::vector<Vertex>& filled_out,
                                  bool trusted) {
  std::vector<Vertex> m, b;
  pair_of(cluster, m, b, trusted);
  last_filled(filled_out);
}

InterfaceAnalyzer::CoreResult InterfaceAnalyzer::core_of(
    const std::vector<Vertex>& boundary, Vertex inner_seed,
    std::vector<Vertex>& core_out, std::vector<Vertex>* inner_members,
    std::vector<Vertex>* trapped) {
  stamp_set(boundary);
  validate_set(max_layer_boundary_, false);
  const PlanarMap& g = host_->map;
  if (inner_seed < 0 || inner_seed >= g.num_vertices() ||
      in_set_[inner_seed] == epoch_)
    fail(ErrorCode::DomainError, "inner seed must lie off the boundary");
  find_components(core_budget(*host_, int64_t(set_.size())));
  if (visit_[inner_seed] != epoch_)
    fail(ErrorCode::DomainError, "inner seed unreachable from the boundary");
  CoreResult res;
  const CompInfo& ic = comps_[comp_[inner_seed]];
  if (ic.certain) {
    res.inner_escaped = true;
    res.volume = -1;
  } else {
    res.volume = ic.members_len;
    if (inner_members != nullptr) {
      inner_members->assign(
          comp_members_.begin() + ic.members_off,
          comp_members_.begin() + ic.members_off + ic.members_len);
      std::sort(inner_members->begin(), inner_members->end());
    }
  }
  core_out.clear();
  for (Vertex c : set_) {
    bool far_side = false;
    for (Arc a = g.rot_begin(c); a < g.rot_end(c) && !far_side; ++a) {
      Vertex u = g.head(a);
      if (in_set_[u] == epoch_) continue;
      if (comps_[comp_[u]].certain) far_side = true;
    }
    if (far_side) core_out.push_back(c);
  }
  if (trapped != nullptr) {
    trapped->clear();
    for (const CompInfo& ci : comps_) {
      if (ci.certain) continue;
      trapped->insert(trapped->end(), comp_members_.begin() + ci.members_off,
                      comp_members_.begin() + ci.members_off + ci.members_len);
    }
    std::sort(trapped->begin(), trapped->end());
  }
  return res;
}

namespace {

InterfacePair interface_of_with(InterfaceAnalyzer& an,
                                const std::vector<Vertex>& cluster,
                                bool trusted) {
  InterfacePair p;
  an.pair_of(cluster, p.interface, p.boundary, trusted);
  an.last_filled(p.filled);
  auto cr = an.core_of(p.boundary, p.filled.front(), p.core);
  if (cr.inner_escaped)
    fail(ErrorCode::DomainError, "enclosed volume exceeds the disc bound");
  if (cr.volume != int64_t(p.filled.size()))
    fail(ErrorCode::DomainError, "boundary does not seal the cluster");
  return p;
}

InterfacePair from_interface_with(InterfaceAnalyzer& an,
                                  const std::vector<Vertex>& m) {
  std::vector<Vertex> mb, bb, cand;
  an.pair_of(m, mb, bb, false);
  an.last_filled(cand);
  Vertex root = an.host().map.root();
  if (!std::binary_search(cand.begin(), cand.end(), root))
    fail(ErrorCode::NotAnInterface, "interface does not wrap the root");
  InterfacePair p = interface_of_with(an, cand, true);
  std::vector<Vertex> want(m);
  std::sort(want.begin(), want.end());
  if (p.interface != want)
    fail(ErrorCode::NotAnInterface,
         "set is not the interface of the region it wraps");
  return p;
}

InterfacePair from_boundary_with(InterfaceAnalyzer& an,
                                 const std::vector<Vertex>& b) {
  const Ball& host = an.host();
  Vertex root = host.map.root();
  for (Vertex v : b)
    if (v == root)
      fail(ErrorCode::NotAnInterface, "root lies on the boundary");
  std::vector<Vertex> core, cand;
  auto cr = an.core_of(b, root, core, &cand);
  if (cr.inner_escaped)
    fail(ErrorCode::NotAnInterface, "boundary does not enclose the root");
  for (Vertex v : cand)
    if (host.layer[v] > host.radius - 2)
      fail(ErrorCode::TooCloseToRim,
           "enclosed region needs more room between it and the rim");
  InterfacePair p = interface_of_with(an, cand, true);
  std::vector<Vertex> want(b);
  std::sort(want.begin(), want.end());
  if (p.boundary != want)
    fail(ErrorCode::NotAnInterface,
         "set is not the outer boundary of the region it encloses");
  return p;
}

}  // namespace

InterfacePair interface_of(const Ball& host,
                           const std::vector<Vertex>& cluster) {
  InterfaceAnalyzer an(host);
  return interface_of_with(an, cluster, false);
}

InterfacePair from_interface(const Ball& host, const std::vector<Vertex>& m) {
  InterfaceAnalyzer an(host);
  return from_interface_with(an, m);
}

InterfacePair from_boundary(const Ball& host, const std::vector<Vertex>& b) {
  InterfaceAnalyzer an(host);
  return from_boundary_with(an, b);
}

namespace {

// Dedup store for packed (M, B) keys: open addressing over one arena.
class PairTable {
 public:
  explicit PairTable(bool wide_ids) : wide_(wide_ids) {
    slot_.assign(1u << 16, -1);
    mask_ = (1u << 16) - 1;
  }

  bool insert(const std::vector<Vertex>& m, const std::vector<Vertex>& b) {
    pack(m, b);
    uint64_t h = fnv(key_.data(), key_.size());
    if ((ents_.size() + 1) * 10 >= slot_.size() * 7) grow();
    size_t i = h & mask_;
    while (true) {
      int64_t e = slot_[i];
      if (e < 0) break;
      const Ent& ent = ents_[size_t(e)];
      if (ent.h == h && ent.len == int32_t(key_.size()) &&
          std::memcmp(arena_.data() + ent.off, key_.data(), key_.size()) == 0)
        return false;
      i = (i + 1) & mask_;
    }
    slot_[i] = int64_t(ents_.size());
    ents_.push_back(Ent{h, int64_t(arena_.size()), int32_t(key_.size())});
    arena_.insert(arena_.end(), key_.begin(), key_.end());
    return true;
  }

  int64_t size() const { return int64_t(ents_.size()); }

 private:
  struct Ent {
    uint64_t h;
    int64_t off;
    int32_t len;
  };

  static uint64_t fnv(const uint8_t* p, size_t n) {
    uint64_t h = 1469598103934665603ull;
    for (size_t i = 0; i < n; ++i) {
      h ^= p[i];
      h *= 1099511628211ull;
    }
    return h;
  }

  void pack(const std::vector<Vertex>& m, const std::vector<Vertex>& b) {
    key_.clear();
    auto put = [&](uint32_t x) {
      key_.push_back(uint8_t(x));
      key_.push_back(uint8_t(x >> 8));
      if (wide_) {
        key_.push_back(uint8_t(x >> 16));
        key_.push_back(uint8_t(x >> 24));
      }
    };
    put(uint32_t(m.size()));
    for (Vertex v : m) put(uint32_t(v));
    for (Vertex v : b) put(uint32_t(v));
  }

  void grow() {
    size_t ns = slot_.size() * 2;
    mask_ = ns - 1;
    slot_.assign(ns, -1);
    for (size_t e = 0; e < ents_.size(); ++e) {
      size_t i = ents_[e].h & mask_;
      while (slot_[i] >= 0) i = (i + 1) & mask_;
      slot_[i] = int64_t(e);
    }
  }

  bool wide_;
  size_t mask_;
  std::vector<int64_t> slot_;
  std::vector<Ent> ents_;
  std::vector<uint8_t> arena_;
  std::vector<uint8_t> key_;
};

class CensusRunner {
 public:
  CensusRunner(const Ball& host, int32_t cap, bool roundtrip)
      : host_(host),
        an_(host),
        cap_(cap),
        roundtrip_(roundtrip),
        checks_(host.face_degree == 3 ? host.d >= 6 : host.d >= 5),
        table_(host.map.num_vertices() > 65535) {
    out_.d = host.d;
    out_.face_degree = host.face_degree;
    out_.radius = host.radius;
    out_.cap = cap;
    max_b_bound_ = int64_t(cap) * (host.d - 2) + 2;
    counts_.assign(size_t(max_b_bound_ + 1) * size_t(cap + 1), 0);
    reached_.assign(host.map.num_vertices(), 0);
  }

  PairCensus run() {
    const PlanarMap& g = host_.map;
    Vertex root = g.root();
    cluster_.push_back(root);
    reached_[root] = 1;
    record();
    for (Arc a = g.rot_begin(root); a < g.rot_end(root); ++a) {
      Vertex w = g.head(a);
      if (allowed(w)) {
        reached_[w] = 1;
        cands_.push_back(w);
      }
    }
    if (cap_ > 1) grow(0);
    for (int32_t b = 0; b <= int32_t(max_b_bound_); ++b)
      for (int32_t m = 0; m <= cap_; ++m) {
        int64_t c = counts_[size_t(b) * size_t(cap_ + 1) + size_t(m)];
        if (c > 0) out_.counts.push_back(CensusEntry{b, m, c});
      }
    out_.distinct_pairs = table_.size();
    return std::move(out_);
  }

 private:
  bool allowed(Vertex v) const {
    return host_.layer[v] <= host_.radius - 2;
  }

  void grow(size_t first) {
    const PlanarMap& g = host_.map;
    size_t csize = cands_.size();
    for (size_t i = first; i < csize; ++i) {
      Vertex v = cands_[i];
      cluster_.push_back(v);
      record();
      if (int32_t(cluster_.size()) < cap_) {
        size_t base = cands_.size();
        for (Arc a = g.rot_begin(v); a < g.rot_end(v); ++a) {
          Vertex w = g.head(a);
          if (reached_[w] || !allowed(w)) continue;
          reached_[w] = 1;
          cands_.push_back(w);
        }
        grow(i + 1);
        while (cands_.size() > base) {
          reached_[cands_.back()] = 0;
          cands_.pop_back();
        }
      }
      cluster_.pop_back();
    }
  }

  void record() {
    ++out_.clusters_enumerated;
    an_.pair_of(cluster_, m_buf_, b_buf_, true);
    if (!table_.insert(m_buf_, b_buf_)) return;
    int64_t m = int64_t(m_buf_.size());
    int64_t b = int64_t(b_buf_.size());
    if (b > max_b_bound_ || m > cap_)
      fail(ErrorCode::DomainError, "pair size outside provable bounds");
    ++counts_[size_t(b) * size_t(cap_ + 1) + size_t(m)];
    an_.last_filled(filled_buf_);
    auto cr = an_.core_of(b_buf_, filled_buf_.front(), core_buf_);
    int64_t bc = int64_t(core_buf_.size());
    std::string bad;
    auto flag = [&](const char* what) {
      if (!bad.empty()) bad += ',';
      bad += what;
    };
    if (cr.inner_escaped) {
      flag(host_.face_degree == 3 ? "volume" : "enclosure");
    } else {
      if (cr.volume != int64_t(filled_buf_.size())) flag("seal");
      if (checks_) {
        if (host_.face_degree == 3 && !volume_check(cr.volume, b))
          flag("volume");
        if (!ratio_check(m, b, bc, host_.d, host_.face_degree)) flag("ratio");
        if (!alpha_check(m, b, bc, host_.d, host_.face_degree)) flag("alpha");
        if (!combined_check(m, b, host_.d, host_.face_degree)) flag("combined");
      }
    }
    if (!bad.empty()) {
      ++out_.violations;
      if (out_.violation_notes.size() < 8) {
        std::ostringstream os;
        os << "b=" << b << " m=" << m << " b0=" << bc << " vol=" << cr.volume
           << " failed " << bad;
        out_.violation_notes.push_back(os.str());
      }
    }
    if (roundtrip_) {
      bool ok = true;
      try {
        InterfacePair pm = from_interface_with(an_, m_buf_);
        ok = pm.interface == m_buf_ && pm.boundary == b_buf_ &&
             pm.filled == filled_buf_;
        if (ok) {
          InterfacePair pb = from_boundary_with(an_, b_buf_);
          ok = pb.interface == m_buf_ && pb.boundary == b_buf_ &&
               pb.filled == filled_buf_;
        }
      } catch (const Error&) {
        ok = false;
      }
      if (!ok) ++out_.roundtrip_failures;
    }
    if (int32_t(m) > out_.max_m) {
      out_.max_m = int32_t(m);
      out_.widest_interface = m_buf_;
      out_.widest_boundary = b_buf_;
    }
    out_.max_b = std::max(out_.max_b, int32_t(b));
    if (!cr.inner_escaped) out_.max_volume = std::max(out_.max_volume, cr.volume);
  }

  const Ball& host_;
  InterfaceAnalyzer an_;
  int32_t cap_;
  bool roundtrip_;
  bool checks_;  // the ratio/alpha/volume inequalities need an in-regime host
  PairTable table_;
  int64_t max_b_bound_;
  std::vector<int64_t> counts_;
  std::vector<uint8_t> reached_;
  std::vector<Vertex> cluster_, cands_;
  std::vector<Vertex> m_buf_, b_buf_, core_buf_, filled_buf_;
  PairCensus out_;
};

}  // namespace

PairCensus enumerate_pairs(const Ball& host, int32_t cap, bool roundtrip) {
  if (cap < 1) fail(ErrorCode::DomainError, "census cap must be positive");
  if (host.radius < 2)
    fail(ErrorCode::TooCloseToRim, "patch radius leaves no room for clusters");
  CensusRunner runner(host, cap, roundtrip);
  return runner.run();
}

std::string census_to_json_string(const PairCensus& census, int indent) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["kind"] = "pair_census";
  j["patch"] = {{"d", census.d},
                {"face_degree", census.face_degree},
                {"radius", census.radius}};
  j["cap"] = census.cap;
  j["clusters_enumerated"] = census.clusters_enumerated;
  j["distinct_pairs"] = census.distinct_pairs;
  nlohmann::json counts = nlohmann::json::array();
  for (const CensusEntry& e : census.counts)
    counts.push_back({{"n", e.b}, {"m", e.m}, {"b", e.count}});
  j["counts"] = std::move(counts);
  j["violations"] = census.violations;
  j["violation_notes"] = census.violation_notes;
  j["roundtrip_failures"] = census.roundtrip_failures;
  j["extremal"] = {{"max_m", census.max_m},
                   {"max_b", census.max_b},
                   {"max_volume", census.max_volume},
                   {"widest_interface", census.widest_interface},
                   {"widest_boundary", census.widest_boundary}};
  return indent >= 0 ? j.dump(indent) : j.dump();
}

}  // namespace hyperlat
