#include "semicomm/commutator.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>

namespace semicomm {

  namespace {

    // Dense bitset when the code space is small enough, hash set otherwise.
    class CodeSet {
     public:
      static constexpr std::uint64_t DENSE_LIMIT = std::uint64_t(1) << 30;

      explicit CodeSet(std::optional<std::uint64_t> universe)
          : _dense(universe && *universe <= DENSE_LIMIT) {
        if (_dense) {
          _bits.assign((*universe + 63) / 64, 0);
        }
      }

      bool contains(std::uint64_t code) const {
        if (_dense) {
          return (_bits[code >> 6] >> (code & 63)) & 1;
        }
        return _hashed.count(code) != 0;
      }

      bool insert(std::uint64_t code) {
        if (_dense) {
          std::uint64_t& word = _bits[code >> 6];
          std::uint64_t  mask = std::uint64_t(1) << (code & 63);
          if (word & mask) {
            return false;
          }
          word |= mask;
          return true;
        }
        return _hashed.insert(code).second;
      }

     private:
      bool                              _dense;
      std::vector<std::uint64_t>        _bits;
      std::unordered_set<std::uint64_t> _hashed;
    };

    // n^length, or nullopt if it does not fit into 64 bits.
    std::optional<std::uint64_t> code_space(std::size_t n, std::size_t length) {
      unsigned __int128 total = 1;
      for (std::size_t i = 0; i < length; ++i) {
        total *= n;
        if (total > std::numeric_limits<std::uint64_t>::max()) {
          return std::nullopt;
        }
      }
      return static_cast<std::uint64_t>(total);
    }

    struct Candidate {
      std::uint64_t          code;
      std::size_t            offset;  // into the owning chunk's entry buffer
    };

    struct Chunk {
      std::vector<Candidate> found;
      std::vector<CubeEntry> entries;
    };

    class Closure {
     public:
      Closure(FiniteSemigroup const& S, std::size_t length,
              std::uint64_t cap, std::size_t workers,
              std::optional<std::uint64_t> universe)
          : _S(S),
            _n(S.size()),
            _length(length),
            _cap(cap),
            _workers(std::max<std::size_t>(1, workers)),
            _set(universe),
            _powers(length) {
        std::uint64_t p = 1;
        for (std::size_t b = 0; b < length; ++b) {
          _powers[b] = p;
          p *= (b + 1 < length) ? _n : 1;
        }
      }

      std::uint64_t code_of(CubeEntry const* cube) const {
        std::uint64_t c = 0;
        for (std::size_t b = 0; b < _length; ++b) {
          c += cube[b] * _powers[b];
        }
        return c;
      }

      void add_generator(std::vector<CubeEntry> const& gen) {
        if (_set.contains(code_of(gen.data()))) {
          return;
        }
        std::size_t const old_size = size();
        push(code_of(gen.data()), gen.data());
        _generators.push_back(gen);
        // Words x * gen for x already present, then extend new elements on
        // the right by every active generator until nothing new appears.
        expand(0, old_size, _generators.size() - 1, _generators.size());
        std::size_t begin = old_size;
        while (begin < size()) {
          std::size_t const end = size();
          expand(begin, end, 0, _generators.size());
          begin = end;
        }
      }

      std::size_t size() const {
        return _codes.size();
      }

      std::vector<std::uint64_t>& codes() {
        return _codes;
      }
      std::vector<CubeEntry>& entries() {
        return _entries;
      }

     private:
      void push(std::uint64_t code, CubeEntry const* cube) {
        _set.insert(code);
        _codes.push_back(code);
        _entries.insert(_entries.end(), cube, cube + _length);
        if (_codes.size() > _cap) {
          throw CubeSetTooLarge("more than " + std::to_string(_cap)
                                + " cubes generated");
        }
      }

      // Multiply members [begin, end) on the right by generators
      // [gbegin, gend); new products are appended in (member, generator)
      // order whatever the number of workers.
      void expand(std::size_t begin, std::size_t end, std::size_t gbegin,
                  std::size_t gend) {
        if (begin >= end) {
          return;
        }
        std::size_t const count   = end - begin;
        std::size_t const workers = std::min(_workers, count);
        std::vector<Chunk> chunks(workers);
        auto run = [&](std::size_t w) {
          std::size_t const lo = begin + count * w / workers;
          std::size_t const hi = begin + count * (w + 1) / workers;
          Chunk&            chunk = chunks[w];
          std::vector<CubeEntry> product(_length);
          Element const* table = _S.flat_table().data();
          for (std::size_t x = lo; x < hi; ++x) {
            CubeEntry const* cube = _entries.data() + x * _length;
            for (std::size_t g = gbegin; g < gend; ++g) {
              CubeEntry const* gen = _generators[g].data();
              std::uint64_t    c   = 0;
              for (std::size_t b = 0; b < _length; ++b) {
                product[b] = static_cast<CubeEntry>(
                    table[std::size_t(cube[b]) * _n + gen[b]]);
                c += product[b] * _powers[b];
              }
              if (!_set.contains(c)) {
                chunk.found.push_back({c, chunk.entries.size()});
                chunk.entries.insert(
                    chunk.entries.end(), product.begin(), product.end());
              }
            }
          }
        };
        if (workers == 1) {
          run(0);
        } else {
          std::vector<std::thread> threads;
          for (std::size_t w = 0; w < workers; ++w) {
            threads.emplace_back(run, w);
          }
          for (auto& t : threads) {
            t.join();
          }
        }
        for (auto const& chunk : chunks) {
          for (auto const& cand : chunk.found) {
            if (!_set.contains(cand.code)) {
              push(cand.code, chunk.entries.data() + cand.offset);
            }
          }
        }
      }

      FiniteSemigroup const&              _S;
      std::size_t                         _n;
      std::size_t                         _length;
      std::uint64_t                       _cap;
      std::size_t                         _workers;
      CodeSet                             _set;
      std::vector<std::uint64_t>          _powers;
      std::vector<std::vector<CubeEntry>> _generators;
      std::vector<std::uint64_t>          _codes;
      std::vector<CubeEntry>              _entries;
    };

  }  // namespace

  CubeSet CubeSet::generate(FiniteSemigroup const&      S,
                            std::span<Congruence const> alphas,
                            Budget const&               budget) {
    std::size_t const k = alphas.size();
    std::size_t const n = S.size();
    if (k == 0) {
      throw InvalidArgument("a cube set needs at least one congruence");
    }
    for (auto const& alpha : alphas) {
      if (alpha.size() != n) {
        throw InvalidArgument("congruence on a set of the wrong size");
      }
    }
    if (k > budget.max_dimension || k >= 16) {
      throw CubeSetTooLarge("cube dimension " + std::to_string(k)
                            + " exceeds the limit "
                            + std::to_string(budget.max_dimension));
    }
    if (n > 65535) {
      throw CubeSetTooLarge("semigroup too large for cube encoding");
    }
    std::size_t const length   = std::size_t(1) << k;
    auto const        universe = code_space(n, length);
    if (!universe) {
      throw CubeSetTooLarge("cube codes for order " + std::to_string(n)
                            + " and dimension " + std::to_string(k)
                            + " exceed 64 bits");
    }

    Closure closure(S, length, budget.cube_cap, budget.workers, universe);
    std::vector<CubeEntry> gen(length);
    for (Element a = 0; a < n; ++a) {
      std::fill(gen.begin(), gen.end(), static_cast<CubeEntry>(a));
      closure.add_generator(gen);
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (auto const& block : alphas[i].blocks()) {
        for (Element a : block) {
          for (Element a2 : block) {
            if (a == a2) {
              continue;
            }
            for (std::size_t b = 0; b < length; ++b) {
              gen[b] = static_cast<CubeEntry>(((b >> i) & 1) ? a2 : a);
            }
            closure.add_generator(gen);
          }
        }
      }
    }

    CubeSet out;
    out._order     = n;
    out._dimension = k;
    out._length    = length;
    auto& codes    = closure.codes();
    auto& entries  = closure.entries();
    std::vector<std::size_t> order(codes.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return codes[x] < codes[y];
    });
    out._codes.reserve(codes.size());
    out._entries.reserve(entries.size());
    for (std::size_t idx : order) {
      out._codes.push_back(codes[idx]);
      out._entries.insert(out._entries.end(),
                          entries.begin() + idx * length,
                          entries.begin() + (idx + 1) * length);
    }
    return out;
  }

  bool CubeSet::contains(std::span<Element const> cube) const {
    if (cube.size() != _length) {
      return false;
    }
    std::uint64_t code = 0, power = 1;
    for (std::size_t b = 0; b < _length; ++b) {
      if (cube[b] >= _order) {
        return false;
      }
      code += cube[b] * power;
      power *= (b + 1 < _length) ? _order : 1;
    }
    return std::binary_search(_codes.begin(), _codes.end(), code);
  }

  namespace {
    // Whether every premise row of the cube is delta-related.
    bool premises_hold(std::span<CubeEntry const> cube,
                       Congruence const&          delta) {
      std::size_t const half = cube.size() / 2;
      for (std::size_t b = 0; b + 1 < half; ++b) {
        if (!delta.related(cube[b], cube[b + half])) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  CentralityResult centralizes(CubeSet const& cubes, Congruence const& delta) {
    std::size_t const half = cubes.cube_length() / 2;
    std::size_t const c    = half - 1;
    std::size_t const d    = cubes.cube_length() - 1;
    for (std::size_t i = 0; i < cubes.size(); ++i) {
      auto const cube = cubes.cube(i);
      if (delta.related(cube[c], cube[d])) {
        continue;
      }
      if (premises_hold(cube, delta)) {
        return {false, std::vector<Element>(cube.begin(), cube.end())};
      }
    }
    return {};
  }

  CentralityResult centralizes(FiniteSemigroup const&      S,
                               std::span<Congruence const> alphas,
                               Congruence const&           delta,
                               Budget const&               budget) {
    if (delta.size() != S.size()) {
      throw InvalidArgument("delta is on a set of the wrong size");
    }
    return centralizes(CubeSet::generate(S, alphas, budget), delta);
  }

  Congruence commutator(FiniteSemigroup const& S, CubeSet const& cubes) {
    std::size_t const half = cubes.cube_length() / 2;
    std::size_t const c    = half - 1;
    std::size_t const d    = cubes.cube_length() - 1;
    // Cubes whose conclusion is trivially related can never force a pair.
    std::vector<std::size_t> relevant;
    for (std::size_t i = 0; i < cubes.size(); ++i) {
      auto const cube = cubes.cube(i);
      if (cube[c] != cube[d]) {
        relevant.push_back(i);
      }
    }
    Congruence delta = Partition::identity(S.size());
    while (true) {
      std::vector<std::pair<Element, Element>> forced;
      std::vector<std::size_t>                 still_relevant;
      for (std::size_t i : relevant) {
        auto const cube = cubes.cube(i);
        if (delta.related(cube[c], cube[d])) {
          continue;
        }
        still_relevant.push_back(i);
        if (premises_hold(cube, delta)) {
          forced.emplace_back(cube[c], cube[d]);
        }
      }
      if (forced.empty()) {
        return delta;
      }
      std::sort(forced.begin(), forced.end());
      forced.erase(std::unique(forced.begin(), forced.end()), forced.end());
      delta    = congruence_closure(S, delta, forced);
      relevant = std::move(still_relevant);
    }
  }

  Congruence commutator(FiniteSemigroup const&      S,
                        std::span<Congruence const> alphas,
                        Budget const&               budget) {
    if (alphas.size() < 2) {
      throw InvalidArgument("a commutator needs at least two congruences");
    }
    return commutator(S, CubeSet::generate(S, alphas, budget));
  }

}  // namespace semicomm
