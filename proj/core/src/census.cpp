#include "degen/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "aberth.hpp"
#include "degen/degeneracy.hpp"
#include "degen/irreducibility.hpp"
#include "degen/resultants.hpp"
#include "modarith.hpp"

namespace degen {

namespace {

using detail::kMaxCensusDegree;

struct FastCtx {
  int n = 0;
  OrderMode mode = OrderMode::safe;
  bool prefilter = true;
  double rel_gap = 1e-9;
  std::array<std::vector<int>, kMaxCensusDegree + 1> orders_by_deg;
  bool screen_available = false;
  detail::ScreenPrime sp1, sp2;
};

// lcm of the candidate orders, or 0 on overflow past 2^61.
uint64_t orders_lcm(const std::vector<int>& orders) {
  uint64_t l = 1;
  for (int k : orders) {
    uint64_t g = std::gcd(l, static_cast<uint64_t>(k));
    uint64_t q = static_cast<uint64_t>(k) / g;
    if (l > (1ull << 61) / q) return 0;
    l *= q;
  }
  return l;
}

FastCtx build_fast_ctx(const CensusConfig& cfg) {
  FastCtx ctx;
  ctx.n = cfg.n;
  ctx.mode = cfg.order_mode;
  ctx.prefilter = cfg.prefilter;
  for (int d = 2; d <= cfg.n; ++d) ctx.orders_by_deg[static_cast<size_t>(d)] = candidate_orders(d, cfg.order_mode);

  const std::vector<int>& all = ctx.orders_by_deg[static_cast<size_t>(cfg.n)];
  uint64_t l = orders_lcm(all);
  if (l != 0) {
    uint64_t p1 = detail::find_prime_1mod(l, 1ull << 60);
    uint64_t p2 = p1 ? detail::find_prime_1mod(l, p1) : 0;
    if (p1 && p2 && p2 < (1ull << 62)) {
      ctx.sp1.init(p1, all);
      ctx.sp2.init(p2, all);
      ctx.screen_available = true;
    }
  }
  return ctx;
}

// Per-thread classification scratch.  All hot-path state lives in fixed
// arrays; the exact bignum path only runs on screened survivors.
class Classifier {
 public:
  explicit Classifier(const FastCtx* ctx) : ctx_(ctx) {}

  bool degenerate(const int64_t* c, int n) {
    // strip zero roots (trailing entries of the descending array)
    int v = 0;
    while (n - v > 0 && c[n - v] == 0) ++v;
    const int d = n - v;
    if (d <= 1) return false;
    if (d == 2) return quad_closed(c[0], c[1], c[2]);

    if (ctx_->prefilter && prefilter_separated(c, d, v > 0)) return false;

    // squarefree core
    const int64_t* f = c;
    int fd = d;
    if (!ctx_->screen_available ||
        !detail::squarefree_screen_nonzero(std::span<const int64_t>(c, static_cast<size_t>(d) + 1), ctx_->sp1)) {
      fd = exact_squarefree(c, d);
      f = sf_.data();
      if (fd <= 1) return false;
      if (fd == 2) return quad_closed(f[0], f[1], f[2]);
    }

    const std::vector<int>& orders = ctx_->orders_by_deg[static_cast<size_t>(fd)];
    if (ctx_->screen_available) {
      std::span<const int64_t> fs(f, static_cast<size_t>(fd) + 1);
      screen_.build(fs, ctx_->sp1);
      survivors_.clear();
      for (int k : orders)
        if (!screen_.nonzero_at(ctx_->sp1.omega_of(k), ctx_->sp1)) survivors_.push_back(k);
      if (survivors_.empty()) return false;
      screen_.build(fs, ctx_->sp2);
      size_t w = 0;
      for (int k : survivors_)
        if (!screen_.nonzero_at(ctx_->sp2.omega_of(k), ctx_->sp2)) survivors_[w++] = k;
      survivors_.resize(w);
      if (survivors_.empty()) return false;
      IntPoly fp = to_intpoly(f, fd);
      for (int k : survivors_)
        if (fast_witness(fp, k)) return true;
      return false;
    }
    IntPoly fp = to_intpoly(f, fd);
    for (int k : orders)
      if (fast_witness(fp, k)) return true;
    return false;
  }

  bool irreducible(const int64_t* c, int n) {
    return is_irreducible_q(to_intpoly(c, n));
  }

 private:
  static bool quad_closed(int64_t a0, int64_t a1, int64_t a2) {
    if (a1 == 0) return a2 != 0;
    // |coeffs| <= 2e6 keeps these products well inside int64
    int64_t t = a1 * a1;
    int64_t p = a0 * a2;
    return t == p || t == 2 * p || t == 3 * p;
  }

  bool prefilter_separated(const int64_t* c, int d, bool has_zero_root) {
    std::array<double, kMaxCensusDegree + 1> dc;
    for (int i = 0; i <= d; ++i) dc[static_cast<size_t>(i)] = static_cast<double>(c[i]);
    std::array<std::complex<double>, kMaxCensusDegree> roots;
    std::array<double, kMaxCensusDegree> radii;
    detail::aberth_solve(std::span<const double>(dc.data(), static_cast<size_t>(d) + 1),
                         std::span<std::complex<double>>(roots.data(), static_cast<size_t>(d)),
                         std::span<double>(radii.data(), static_cast<size_t>(d)));
    std::array<double, kMaxCensusDegree + 1> mods;
    std::array<double, kMaxCensusDegree + 1> rads;
    int m = 0;
    if (has_zero_root) {
      mods[0] = 0.0;
      rads[0] = 0.0;
      m = 1;
    }
    for (int i = 0; i < d; ++i, ++m) {
      double mod = std::abs(roots[static_cast<size_t>(i)]);
      double rad = radii[static_cast<size_t>(i)];
      if (!std::isfinite(mod) || !std::isfinite(rad)) return false;
      mods[static_cast<size_t>(m)] = mod;
      rads[static_cast<size_t>(m)] = rad;
    }
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        double gap = std::fabs(mods[static_cast<size_t>(i)] - mods[static_cast<size_t>(j)]);
        double need = rads[static_cast<size_t>(i)] + rads[static_cast<size_t>(j)] +
                      ctx_->rel_gap * std::max(mods[static_cast<size_t>(i)], mods[static_cast<size_t>(j)]);
        if (gap <= need) return false;
      }
    return true;
  }

  // Exact squarefree part into sf_; returns its degree.
  int exact_squarefree(const int64_t* c, int d) {
    IntPoly f = to_intpoly(c, d);
    IntPoly s = squarefree_part(f);
    int sd = s.deg();
    for (int i = 0; i <= sd; ++i) {
      const Int& a = s.coeffs()[static_cast<size_t>(i)];
      if (!a.fits_slong_p())
        throw std::logic_error("census: squarefree part exceeds int64 range");
      sf_[static_cast<size_t>(i)] = a.get_si();
    }
    return sd;
  }

  static IntPoly to_intpoly(const int64_t* c, int n) {
    std::vector<Int> v;
    v.reserve(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) v.emplace_back(static_cast<long>(c[i]));
    return IntPoly(std::move(v));
  }

  const FastCtx* ctx_;
  detail::RatioScreen screen_;
  std::array<int64_t, kMaxCensusDegree + 1> sf_{};
  std::vector<int> survivors_;
};

// ---------------------------------------------------------------------------
// checkpoint encoding: one header line, then one line per completed partition
//   part <id> total <v..> degenerate <v..> [irr <v..> red <v..>]
// Histograms are h-indexed, h in [0, h_max].  A trailing line without a
// newline is an interruption artifact and is ignored on load.
// ---------------------------------------------------------------------------

std::string tally_line(long long id, const Tally& t) {
  std::ostringstream os;
  os << "part " << id;
  auto dump = [&os](const char* name, const std::vector<unsigned long long>& v) {
    os << ' ' << name;
    for (unsigned long long x : v) os << ' ' << x;
  };
  dump("total", t.total);
  dump("degenerate", t.degenerate);
  if (t.split) {
    dump("irr", t.irr);
    dump("red", t.red);
  }
  return os.str();
}

std::map<long long, Tally> load_checkpoint(const std::string& path, const CensusConfig& cfg,
                                           long long max_id) {
  std::map<long long, Tally> done;
  std::ifstream in(path, std::ios::binary);
  if (!in.is_open()) return done;

  std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (contents.empty()) return done;

  std::vector<std::string> lines;
  size_t pos = 0;
  while (pos < contents.size()) {
    size_t nl = contents.find('\n', pos);
    if (nl == std::string::npos) break;  // unterminated tail: interruption artifact
    lines.push_back(contents.substr(pos, nl - pos));
    pos = nl + 1;
  }
  if (lines.empty()) return done;

  if (lines[0] != checkpoint_config_echo(cfg))
    throw std::runtime_error("checkpoint: config echo mismatch in " + path);

  for (size_t li = 1; li < lines.size(); ++li) {
    std::istringstream is(lines[li]);
    std::string tag;
    long long id = -1;
    is >> tag >> id;
    if (tag != "part" || id < 0 || id > max_id)
      throw std::runtime_error("checkpoint: corrupt partition record at line " +
                               std::to_string(li + 1));
    Tally t = Tally::zero(cfg.h_max, cfg.split);
    t.partition_ids = {id};
    auto read_histo = [&](const char* name, std::vector<unsigned long long>& v) {
      std::string got;
      is >> got;
      if (got != name)
        throw std::runtime_error("checkpoint: corrupt partition " + std::to_string(id));
      for (auto& x : v)
        if (!(is >> x))
          throw std::runtime_error("checkpoint: corrupt partition " + std::to_string(id));
    };
    read_histo("total", t.total);
    read_histo("degenerate", t.degenerate);
    if (cfg.split) {
      read_histo("irr", t.irr);
      read_histo("red", t.red);
    }
    if (done.count(id))
      throw std::runtime_error("checkpoint: duplicate partition " + std::to_string(id));
    done.emplace(id, std::move(t));
  }
  return done;
}

}  // namespace

void validate_config(const CensusConfig& cfg) {
  if (cfg.n < 2 || cfg.n > kMaxCensusDegree)
    throw std::invalid_argument("census: degree must be in 2..8");
  if (cfg.h_max < 1 || cfg.h_max > 2'000'000)
    throw std::invalid_argument("census: h_max must be in 1..2'000'000");
  if (cfg.split && cfg.n > 4)
    throw std::invalid_argument("census: split requires n <= 4");
  if (cfg.threads < 1) throw std::invalid_argument("census: threads must be >= 1");
}

std::vector<SubBox> partition_box(const CensusConfig& cfg) {
  validate_config(cfg);
  std::vector<SubBox> parts;
  if (cfg.variant == Variant::monic) {
    parts.reserve(static_cast<size_t>(2 * cfg.h_max + 1));
    for (long long a1 = -cfg.h_max; a1 <= cfg.h_max; ++a1)
      parts.push_back({a1 + cfg.h_max, a1});
  } else {
    parts.reserve(static_cast<size_t>(cfg.h_max));
    for (long long a0 = 1; a0 <= cfg.h_max; ++a0) parts.push_back({a0 - 1, a0});
  }
  return parts;
}

Tally Tally::zero(long long h_max, bool split) {
  Tally t;
  t.h_max = h_max;
  t.split = split;
  size_t len = static_cast<size_t>(h_max) + 1;
  t.total.assign(len, 0);
  t.degenerate.assign(len, 0);
  if (split) {
    t.irr.assign(len, 0);
    t.red.assign(len, 0);
  }
  return t;
}

Tally merge(const Tally& a, const Tally& b) {
  if (a.h_max != b.h_max || a.split != b.split)
    throw std::invalid_argument("merge: incompatible tallies");
  for (long long id : a.partition_ids)
    if (std::binary_search(b.partition_ids.begin(), b.partition_ids.end(), id))
      throw std::invalid_argument("merge: overlapping partition ids (partition " +
                                  std::to_string(id) + ")");
  Tally out = a;
  for (size_t i = 0; i < out.total.size(); ++i) {
    out.total[i] += b.total[i];
    out.degenerate[i] += b.degenerate[i];
    if (out.split) {
      out.irr[i] += b.irr[i];
      out.red[i] += b.red[i];
    }
  }
  out.partition_ids.insert(out.partition_ids.end(), b.partition_ids.begin(),
                           b.partition_ids.end());
  std::sort(out.partition_ids.begin(), out.partition_ids.end());
  return out;
}

std::string checkpoint_config_echo(const CensusConfig& cfg) {
  std::ostringstream os;
  os << "degen-census v1 variant=" << to_string(cfg.variant) << " n=" << cfg.n
     << " hmax=" << cfg.h_max << " split=" << (cfg.split ? 1 : 0)
     << " order=" << to_string(cfg.order_mode)
     << " parts=" << (cfg.variant == Variant::monic ? 2 * cfg.h_max + 1 : cfg.h_max);
  return os.str();
}

std::vector<CountRecord> run_census(const CensusConfig& cfg) {
  validate_config(cfg);
  const auto t0 = std::chrono::steady_clock::now();

  const FastCtx ctx = build_fast_ctx(cfg);
  const std::vector<SubBox> parts = partition_box(cfg);
  const long long H = cfg.h_max;

  std::map<long long, Tally> done;
  std::ofstream ck;
  std::mutex ck_mu;
  if (cfg.checkpoint_path) {
    done = load_checkpoint(*cfg.checkpoint_path, cfg, static_cast<long long>(parts.size()) - 1);
    bool fresh = done.empty();
    ck.open(*cfg.checkpoint_path, fresh ? std::ios::trunc : std::ios::app);
    if (!ck.is_open())
      throw std::runtime_error("census: cannot open checkpoint file " + *cfg.checkpoint_path);
    if (fresh) ck << checkpoint_config_echo(cfg) << '\n' << std::flush;
  }

  std::vector<Tally> results(parts.size());
  std::vector<char> computed(parts.size(), 0);
  for (size_t i = 0; i < parts.size(); ++i) {
    auto it = done.find(parts[i].id);
    if (it != done.end()) {
      results[i] = std::move(it->second);
      computed[i] = 1;
    }
  }

  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::string error_message;
  std::mutex error_mu;

  auto worker = [&]() {
    Classifier cls(&ctx);
    std::array<int64_t, kMaxCensusDegree + 1> c{};
    const int nfree = cfg.variant == Variant::monic ? cfg.n - 1 : cfg.n;
    const int base = cfg.variant == Variant::monic ? 2 : 1;

    while (!failed.load(std::memory_order_relaxed)) {
      size_t i = next.fetch_add(1);
      if (i >= parts.size()) break;
      if (computed[i]) continue;
      try {
        Tally t = Tally::zero(H, cfg.split);
        t.partition_ids = {parts[i].id};

        c[0] = cfg.variant == Variant::monic ? 1 : parts[i].first_coeff;
        if (cfg.variant == Variant::monic) c[1] = parts[i].first_coeff;

        // odometer over the remaining free coefficients in [-H, H]
        for (int j = 0; j < nfree; ++j) c[static_cast<size_t>(base + j)] = -H;
        while (true) {
          long long h = cfg.variant == Variant::monic ? std::llabs(c[1]) : std::llabs(c[0]);
          for (int j = 0; j < nfree; ++j)
            h = std::max(h, std::llabs(c[static_cast<size_t>(base + j)]));

          t.total[static_cast<size_t>(h)] += 1;
          if (cls.degenerate(c.data(), cfg.n)) {
            t.degenerate[static_cast<size_t>(h)] += 1;
            if (cfg.split) {
              if (cls.irreducible(c.data(), cfg.n))
                t.irr[static_cast<size_t>(h)] += 1;
              else
                t.red[static_cast<size_t>(h)] += 1;
            }
          }

          int j = nfree - 1;
          while (j >= 0 && c[static_cast<size_t>(base + j)] == H) {
            c[static_cast<size_t>(base + j)] = -H;
            --j;
          }
          if (j < 0) break;
          c[static_cast<size_t>(base + j)] += 1;
        }

        if (cfg.checkpoint_path) {
          std::lock_guard<std::mutex> lock(ck_mu);
          ck << tally_line(parts[i].id, t) << '\n' << std::flush;
        }
        results[i] = std::move(t);
        computed[i] = 1;
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mu);
        error_message = e.what();
        failed.store(true);
      }
    }
  };

  int nthreads = std::max(1, std::min<int>(cfg.threads, static_cast<int>(parts.size())));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(nthreads));
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failed.load()) throw std::runtime_error("census: " + error_message);

  Tally all = Tally::zero(H, cfg.split);
  for (const Tally& t : results) all = merge(all, t);

  const double wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  // cumulative records (bucket h=0 contributes to every H >= 1); the general
  // variant doubles everything to cover a_0 <= -1
  const unsigned long long mult = cfg.variant == Variant::general ? 2 : 1;
  std::vector<CountRecord> records;
  records.reserve(static_cast<size_t>(H));
  unsigned long long ct = 0, cd = 0, ci = 0, cr = 0;
  ct += all.total[0] * mult;
  cd += all.degenerate[0] * mult;
  if (cfg.split) {
    ci += all.irr[0] * mult;
    cr += all.red[0] * mult;
  }
  for (long long h = 1; h <= H; ++h) {
    ct += all.total[static_cast<size_t>(h)] * mult;
    cd += all.degenerate[static_cast<size_t>(h)] * mult;
    CountRecord rec;
    rec.variant = cfg.variant;
    rec.n = cfg.n;
    rec.H = h;
    rec.total = ct;
    rec.degenerate = cd;
    if (cfg.split) {
      ci += all.irr[static_cast<size_t>(h)] * mult;
      cr += all.red[static_cast<size_t>(h)] * mult;
      rec.irr_degenerate = ci;
      rec.red_degenerate = cr;
    }
    rec.wall_ms = wall_ms;
    records.push_back(std::move(rec));
  }
  return records;
}

std::string records_to_csv(const std::vector<CountRecord>& records) {
  std::ostringstream os;
  os << "variant,n,H,total,degenerate,irr_degenerate,red_degenerate,wall_ms\n";
  for (const CountRecord& r : records) {
    os << to_string(r.variant) << ',' << r.n << ',' << r.H << ',' << r.total << ','
       << r.degenerate << ',';
    if (r.irr_degenerate) os << *r.irr_degenerate;
    os << ',';
    if (r.red_degenerate) os << *r.red_degenerate;
    os << ',';  // wall_ms stays empty: CSV is byte-identical across runs
    os << '\n';
  }
  return os.str();
}

}  // namespace degen
