#include <array>
#include <cstdint>

#include "nws/semigroup.hpp"

namespace nws {
namespace {

// The genus tree only ever touches values up to frobenius + 2*multiplicity,
// which is below 3*genus + 3; a 256-bit membership word covers genus <= 80.
constexpr int kBitWords = 4;
constexpr std::int64_t kBitCap = kBitWords * 64;
constexpr int kMaxTreeGenus = 80;

struct TreeNode {
  std::array<std::uint64_t, kBitWords> bits;
  std::int64_t mult = 1;
  std::int64_t frob = -1;
  int genus = 0;
  std::vector<std::int64_t> min_gens;

  bool member(std::int64_t n) const {
    if (n < 0) return false;
    if (n >= kBitCap) return true;
    return (bits[n >> 6] >> (n & 63)) & 1u;
  }
  void remove(std::int64_t n) { bits[n >> 6] &= ~(std::uint64_t{1} << (n & 63)); }
};

}  // namespace

class GenusTree {
 public:
  GenusTree(int max_genus, const EnumerateOptions& options,
            const std::function<bool(const NumericalSemigroup&)>& visit)
      : max_genus_(max_genus), options_(options), visit_(visit) {}

  void run() {
    if (max_genus_ < 0) fail(errc::invalid_parameter, "max_genus must be >= 0");
    if (max_genus_ > kMaxTreeGenus) {
      fail(errc::resource_limit,
           "enumeration supports genus <= " + std::to_string(kMaxTreeGenus));
    }
    TreeNode root;
    root.bits.fill(~std::uint64_t{0});
    root.mult = 1;
    root.frob = -1;
    root.genus = 0;
    root.min_gens = {1};
    walk(root);
  }

 private:
  bool walk(const TreeNode& node) {
    if (++visited_ > options_.node_cap) {
      fail(errc::resource_limit,
           "genus tree node cap " + std::to_string(options_.node_cap) + " exceeded");
    }
    if (passes_filters(node)) {
      if (!visit_(materialize(node))) return false;
    }
    if (node.genus >= max_genus_) return true;
    for (auto g : node.min_gens) {
      if (g <= node.frob) continue;
      TreeNode child = make_child(node, g);
      if (options_.max_multiplicity > 0 && child.mult > options_.max_multiplicity) {
        continue;  // multiplicity never decreases below this node
      }
      if (!walk(child)) return false;
    }
    return true;
  }

  bool passes_filters(const TreeNode& node) const {
    if (options_.generator_count > 0 &&
        static_cast<int>(node.min_gens.size()) != options_.generator_count) {
      return false;
    }
    if (node.mult < options_.min_multiplicity) return false;
    if (options_.max_multiplicity > 0 && node.mult > options_.max_multiplicity) {
      return false;
    }
    return true;
  }

  static TreeNode make_child(const TreeNode& parent, std::int64_t g) {
    TreeNode child;
    child.bits = parent.bits;
    child.remove(g);
    child.frob = g;
    child.genus = parent.genus + 1;
    child.mult = parent.mult;
    if (g == parent.mult) {
      std::int64_t m = parent.mult + 1;
      while (!child.member(m)) ++m;
      child.mult = m;
    }
    const std::int64_t hi = child.frob + child.mult;
    for (std::int64_t e = child.mult; e <= hi; ++e) {
      if (!child.member(e)) continue;
      bool decomposable = false;
      for (auto a : child.min_gens) {
        if (a + child.mult > e) break;
        if (child.member(e - a)) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) child.min_gens.push_back(e);
    }
    return child;
  }

  static NumericalSemigroup materialize(const TreeNode& node) {
    NumericalSemigroup s;
    s.generators_ = node.min_gens;
    s.multiplicity_ = node.mult;
    s.frobenius_ = node.frob;
    for (std::int64_t i = 1; i <= node.frob; ++i) {
      if (!node.member(i)) s.gaps_.push_back(i);
    }
    s.apery_.assign(node.mult, -1);
    s.apery_[0] = 0;
    std::int64_t found = 1;
    for (std::int64_t i = 1; found < node.mult; ++i) {
      if (!node.member(i)) continue;
      auto& slot = s.apery_[i % node.mult];
      if (slot < 0) {
        slot = i;
        ++found;
      }
    }
    return s;
  }

  int max_genus_;
  EnumerateOptions options_;
  const std::function<bool(const NumericalSemigroup&)>& visit_;
  std::int64_t visited_ = 0;
};

void enumerate_by_genus(int max_genus, const EnumerateOptions& options,
                        const std::function<bool(const NumericalSemigroup&)>& visit) {
  GenusTree(max_genus, options, visit).run();
}

std::vector<std::int64_t> count_by_genus(int max_genus, std::int64_t node_cap) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(max_genus) + 1, 0);
  EnumerateOptions options;
  options.node_cap = node_cap;
  enumerate_by_genus(max_genus, options, [&](const NumericalSemigroup& s) {
    ++counts[static_cast<std::size_t>(s.genus())];
    return true;
  });
  return counts;
}

}  // namespace nws
