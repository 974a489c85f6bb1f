#include "semicomm/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace semicomm {

  namespace {
    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), 0);
      }

      std::size_t find(std::size_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }

      bool unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return false;
        }
        _parent[std::max(x, y)] = std::min(x, y);
        return true;
      }

      std::vector<std::size_t> labels() {
        std::vector<std::size_t> out(_parent.size());
        for (std::size_t x = 0; x < out.size(); ++x) {
          out[x] = find(x);
        }
        return out;
      }

     private:
      std::vector<std::size_t> _parent;
    };

    void check_same_set(Partition const& a, Partition const& b) {
      if (a.size() != b.size()) {
        throw AlgebraMismatch("partitions of sets of sizes "
                              + std::to_string(a.size()) + " and "
                              + std::to_string(b.size()));
      }
    }

    struct VectorHash {
      std::size_t operator()(std::vector<Element> const& v) const noexcept {
        std::size_t h = v.size();
        for (Element x : v) {
          h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
      }
    };
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Partition
  ////////////////////////////////////////////////////////////////////////

  Partition Partition::from_labels(std::span<std::size_t const> labels) {
    std::vector<Element>            class_of(labels.size());
    std::map<std::size_t, Element>  first;
    for (Element x = 0; x < labels.size(); ++x) {
      auto [it, inserted] = first.emplace(labels[x], x);
      class_of[x]         = it->second;
    }
    return Partition(std::move(class_of));
  }

  Partition Partition::from_blocks(
      std::size_t                              n,
      std::vector<std::vector<Element>> const& blocks) {
    std::vector<std::size_t> label(n, n);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) {
        throw MalformedPartition("empty block");
      }
      for (Element x : blocks[b]) {
        if (x >= n) {
          throw MalformedPartition("element " + std::to_string(x)
                                   + " out of range");
        }
        if (label[x] != n) {
          throw MalformedPartition("element " + std::to_string(x)
                                   + " occurs twice");
        }
        label[x] = b;
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (label[x] == n) {
        throw MalformedPartition("element " + std::to_string(x)
                                 + " is not covered");
      }
    }
    return from_labels(label);
  }

  Partition Partition::identity(std::size_t n) {
    std::vector<Element> class_of(n);
    std::iota(class_of.begin(), class_of.end(), 0);
    return Partition(std::move(class_of));
  }

  Partition Partition::full(std::size_t n) {
    return Partition(std::vector<Element>(n, 0));
  }

  std::size_t Partition::number_of_classes() const {
    std::size_t count = 0;
    for (Element x = 0; x < size(); ++x) {
      count += (_class_of[x] == x);
    }
    return count;
  }

  std::vector<std::vector<Element>> Partition::blocks() const {
    std::vector<std::vector<Element>> out;
    std::vector<std::size_t>          where(size());
    for (Element x = 0; x < size(); ++x) {
      if (_class_of[x] == x) {
        where[x] = out.size();
        out.push_back({x});
      } else {
        out[where[_class_of[x]]].push_back(x);
      }
    }
    return out;
  }

  bool Partition::is_identity() const {
    return number_of_classes() == size();
  }

  bool Partition::is_full() const {
    return std::all_of(
        _class_of.begin(), _class_of.end(), [](Element c) { return c == 0; });
  }

  bool Partition::is_contained_in(Partition const& that) const {
    check_same_set(*this, that);
    for (Element x = 0; x < size(); ++x) {
      if (!that.related(x, _class_of[x])) {
        return false;
      }
    }
    return true;
  }

  std::string to_string(Partition const& p) {
    std::string out = "{";
    bool        first_block = true;
    for (auto const& block : p.blocks()) {
      out += first_block ? "" : "|";
      first_block = false;
      for (std::size_t i = 0; i < block.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(block[i]);
      }
    }
    return out + "}";
  }

  Partition parse_partition(std::string const& text, std::size_t n) {
    std::string s;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        s += c;
      }
    }
    if (s.size() < 2 || s.front() != '{' || s.back() != '}') {
      throw MalformedPartition("expected {a,b|c,...}, got '" + text + "'");
    }
    s = s.substr(1, s.size() - 2);
    std::vector<std::vector<Element>> blocks;
    std::stringstream                 block_stream(s);
    std::string                       block;
    while (std::getline(block_stream, block, '|')) {
      std::vector<Element> members;
      std::stringstream    member_stream(block);
      std::string          item;
      while (std::getline(member_stream, item, ',')) {
        if (item.empty()
            || !std::all_of(item.begin(), item.end(), [](char c) {
                 return std::isdigit(static_cast<unsigned char>(c));
               })) {
          throw MalformedPartition("bad element '" + item + "' in '" + text
                                   + "'");
        }
        members.push_back(static_cast<Element>(std::stoul(item)));
      }
      blocks.push_back(std::move(members));
    }
    return Partition::from_blocks(n, blocks);
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruences
  ////////////////////////////////////////////////////////////////////////

  bool is_congruence(FiniteSemigroup const& S, Partition const& p) {
    if (p.size() != S.size()) {
      throw MalformedPartition("partition of " + std::to_string(p.size())
                               + " points on a semigroup of order "
                               + std::to_string(S.size()));
    }
    // Compatibility only needs checking against class representatives.
    for (Element x = 0; x < S.size(); ++x) {
      Element const r = p.class_of(x);
      if (r == x) {
        continue;
      }
      for (Element s = 0; s < S.size(); ++s) {
        if (!p.related(S(s, x), S(s, r)) || !p.related(S(x, s), S(r, s))) {
          return false;
        }
      }
    }
    return true;
  }

  Congruence congruence_closure(
      FiniteSemigroup const&                       S,
      Congruence const&                            base,
      std::span<std::pair<Element, Element> const> pairs) {
    std::size_t const n = S.size();
    if (base.size() != n) {
      throw AlgebraMismatch("base congruence is on a different set");
    }
    UnionFind uf(n);
    for (Element x = 0; x < n; ++x) {
      uf.unite(x, base.class_of(x));
    }
    std::deque<std::pair<Element, Element>> queue(pairs.begin(), pairs.end());
    while (!queue.empty()) {
      auto const [x, y] = queue.front();
      queue.pop_front();
      if (!uf.unite(x, y)) {
        continue;
      }
      for (Element s = 0; s < n; ++s) {
        queue.emplace_back(S(s, x), S(s, y));
        queue.emplace_back(S(x, s), S(y, s));
      }
    }
    return Partition::from_labels(uf.labels());
  }

  Congruence principal_congruence(FiniteSemigroup const& S, Element a,
                                  Element b) {
    std::pair<Element, Element> const pair{a, b};
    return congruence_closure(S, Partition::identity(S.size()), {&pair, 1});
  }

  Congruence join(Congruence const& a, Congruence const& b) {
    check_same_set(a, b);
    UnionFind uf(a.size());
    for (Element x = 0; x < a.size(); ++x) {
      uf.unite(x, a.class_of(x));
      uf.unite(x, b.class_of(x));
    }
    return Partition::from_labels(uf.labels());
  }

  Congruence meet(Congruence const& a, Congruence const& b) {
    check_same_set(a, b);
    std::vector<std::size_t> labels(a.size());
    for (Element x = 0; x < a.size(); ++x) {
      labels[x] = a.class_of(x) * a.size() + b.class_of(x);
    }
    return Partition::from_labels(labels);
  }

  ////////////////////////////////////////////////////////////////////////
  // Lattice
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr std::size_t MAX_CACHED_LEQ = 4096;
  }

  CongruenceLattice::CongruenceLattice(std::vector<Congruence> members)
      : _members(std::move(members)), _leq(), _cached(false) {
    std::sort(_members.begin(), _members.end());
    _members.erase(std::unique(_members.begin(), _members.end()),
                   _members.end());
    std::size_t const m = _members.size();
    if (m <= MAX_CACHED_LEQ) {
      _leq.resize(m * m);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          _leq[i * m + j] = _members[i].is_contained_in(_members[j]);
        }
      }
      _cached = true;
    }
  }

  std::size_t CongruenceLattice::index_of(Congruence const& c) const {
    auto it = std::lower_bound(_members.begin(), _members.end(), c);
    if (it == _members.end() || *it != c) {
      return size();
    }
    return static_cast<std::size_t>(it - _members.begin());
  }

  bool CongruenceLattice::leq(std::size_t i, std::size_t j) const {
    if (_cached) {
      return _leq[i * size() + j];
    }
    return _members[i].is_contained_in(_members[j]);
  }

  std::size_t CongruenceLattice::bottom() const {
    return size() - 1;
  }

  std::size_t CongruenceLattice::top() const {
    return 0;
  }

  std::vector<std::pair<std::size_t, std::size_t>>
  CongruenceLattice::covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t const                                m = size();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j || !leq(i, j)) {
          continue;
        }
        bool covering = true;
        for (std::size_t k = 0; k < m && covering; ++k) {
          covering = k == i || k == j || !leq(i, k) || !leq(k, j);
        }
        if (covering) {
          out.emplace_back(i, j);
        }
      }
    }
    return out;
  }

  CongruenceLattice all_congruences(FiniteSemigroup const& S,
                                    std::size_t            cap) {
    std::size_t const n = S.size();
    std::vector<Congruence> principals;
    {
      std::set<Congruence> seen;
      for (Element a = 0; a < n; ++a) {
        for (Element b = a + 1; b < n; ++b) {
          auto c = principal_congruence(S, a, b);
          if (seen.insert(c).second) {
            principals.push_back(std::move(c));
          }
        }
      }
    }
    std::unordered_set<std::vector<Element>, VectorHash> found;
    std::vector<Congruence>                              members;
    auto add = [&](Congruence const& c) {
      if (found.insert(c.class_vector()).second) {
        if (found.size() > cap) {
          throw LatticeTooLarge("more than " + std::to_string(cap)
                                + " congruences");
        }
        members.push_back(c);
        return true;
      }
      return false;
    };
    add(Partition::identity(n));
    for (auto const& p : principals) {
      add(p);
    }
    // Every congruence is a join of principal congruences.
    for (std::size_t next = 1; next < members.size(); ++next) {
      for (auto const& p : principals) {
        Congruence j = join(members[next], p);
        add(j);
      }
    }
    return CongruenceLattice(std::move(members));
  }

  std::string lattice_to_dot(CongruenceLattice const& L) {
    std::ostringstream out;
    out << "digraph congruences {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < L.size(); ++i) {
      out << "  n" << i << " [label=\"" << to_string(L[i]) << "\"];\n";
    }
    for (auto const& [lo, hi] : L.covers()) {
      out << "  n" << lo << " -> n" << hi << ";\n";
    }
    out << "}\n";
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Products
  ////////////////////////////////////////////////////////////////////////

  Congruence product_congruence(FiniteSemigroup const&      product,
                                std::span<Congruence const> factors) {
    if (!product.has_product_metadata()) {
      throw MissingProductMetadata("semigroup is not a direct product");
    }
    auto const& orders = product.factor_orders();
    if (factors.size() != orders.size()) {
      throw AlgebraMismatch("expected " + std::to_string(orders.size())
                            + " factor congruences");
    }
    for (std::size_t i = 0; i < orders.size(); ++i) {
      if (factors[i].size() != orders[i]) {
        throw AlgebraMismatch("factor congruence " + std::to_string(i)
                              + " has the wrong order");
      }
    }
    std::vector<std::size_t> labels(product.size());
    for (Element x = 0; x < product.size(); ++x) {
      auto coords = product.coordinates(x);
      for (std::size_t i = 0; i < coords.size(); ++i) {
        coords[i] = factors[i].class_of(coords[i]);
      }
      labels[x] = product.encode(coords);
    }
    return Partition::from_labels(labels);
  }

  std::vector<Congruence> factor_restrictions(FiniteSemigroup const& product,
                                              Congruence const&      theta) {
    if (!product.has_product_metadata()) {
      throw MissingProductMetadata("semigroup is not a direct product");
    }
    auto const&             orders = product.factor_orders();
    std::vector<Congruence> out;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      std::vector<Element> coords(orders.size(), 0);
      std::vector<std::size_t> labels(orders[i]);
      for (Element a = 0; a < orders[i]; ++a) {
        coords[i] = a;
        labels[a] = theta.class_of(product.encode(coords));
      }
      out.push_back(Partition::from_labels(labels));
    }
    return out;
  }

  bool is_skew_free(FiniteSemigroup const& product, std::size_t cap) {
    if (!product.has_product_metadata()) {
      throw MissingProductMetadata("semigroup is not a direct product");
    }
    auto const L = all_congruences(product, cap);
    for (auto const& theta : L.members()) {
      auto const parts = factor_restrictions(product, theta);
      if (product_congruence(product, parts) != theta) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Linked triples
  ////////////////////////////////////////////////////////////////////////

  bool is_normal_subgroup(GroupSpec const& G, std::vector<Element> const& N) {
    std::vector<bool> in(G.size(), false);
    for (Element x : N) {
      if (x >= G.size()) {
        return false;
      }
      in[x] = true;
    }
    if (!in[G.identity()]) {
      return false;
    }
    for (Element x : N) {
      if (!in[G.inverse(x)]) {
        return false;
      }
      for (Element y : N) {
        if (!in[G.product(x, y)]) {
          return false;
        }
      }
      for (Element g = 0; g < G.size(); ++g) {
        if (!in[G.product(G.product(G.inverse(g), x), g)]) {
          return false;
        }
      }
    }
    return true;
  }

  Congruence coset_congruence(GroupSpec const&            G,
                              std::vector<Element> const& normal) {
    if (!is_normal_subgroup(G, normal)) {
      throw MalformedTriple("not a normal subgroup");
    }
    std::vector<std::size_t> labels(G.size());
    for (Element g = 0; g < G.size(); ++g) {
      // Label each element by the least member of its coset gN.
      Element least = G.product(g, normal.front());
      for (Element x : normal) {
        least = std::min(least, G.product(g, x));
      }
      labels[g] = least;
    }
    return Partition::from_labels(labels);
  }

  LinkedTriple linked_triple(ReesSpec const& spec, Congruence const& rho) {
    auto const S = rees_matrix(spec);
    if (rho.size() != S.size() || !is_congruence(S, rho)) {
      throw NotACongruence("relation is not a congruence on the Rees "
                           "matrix semigroup");
    }
    Element const e = spec.group.identity();
    std::vector<std::size_t> i_labels(spec.i_size);
    for (std::size_t i = 0; i < spec.i_size; ++i) {
      i_labels[i] = rho.class_of(rees_code(spec, i, e, 0));
    }
    std::vector<std::size_t> l_labels(spec.lambda_size);
    for (std::size_t l = 0; l < spec.lambda_size; ++l) {
      l_labels[l] = rho.class_of(rees_code(spec, 0, e, l));
    }
    std::vector<Element> normal;
    for (Element g = 0; g < spec.group.size(); ++g) {
      if (rho.related(rees_code(spec, 0, g, 0), rees_code(spec, 0, e, 0))) {
        normal.push_back(g);
      }
    }
    return LinkedTriple{Partition::from_labels(i_labels),
                        std::move(normal),
                        Partition::from_labels(l_labels)};
  }

  Congruence congruence_from_triple(ReesSpec const&     spec,
                                    LinkedTriple const& triple) {
    if (triple.rho_i.size() != spec.i_size
        || triple.rho_lambda.size() != spec.lambda_size) {
      throw MalformedTriple("index partitions have the wrong size");
    }
    auto const rho_g = coset_congruence(spec.group, triple.normal_subgroup);
    auto const S     = rees_matrix(spec);
    std::vector<std::size_t> labels(S.size());
    for (Element x = 0; x < S.size(); ++x) {
      auto const c = rees_coordinates(spec, x);
      labels[x]    = rees_code(spec,
                            triple.rho_i.class_of(c.i),
                            rho_g.class_of(c.g),
                            triple.rho_lambda.class_of(c.lambda));
    }
    auto rho = Partition::from_labels(labels);
    if (!is_congruence(S, rho)) {
      throw NotLinked("the triple does not determine a congruence");
    }
    return rho;
  }

  bool verify_cong_product(ReesSpec const& spec, Congruence const& rho) {
    return congruence_from_triple(spec, linked_triple(spec, rho)) == rho;
  }

}  // namespace semicomm
