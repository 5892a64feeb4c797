#include "trichar/abelian_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace trichar {

AbelianGroup::AbelianGroup(std::vector<uint32_t> orders) : orders_(std::move(orders)) {
  uint64_t size = 1;
  uint32_t expo = 1;
  for (uint32_t d : orders_) {
    if (d == 0) throw validation_error("cyclic factor order must be positive");
    size *= d;
    expo = std::lcm(expo, d);
  }
  if (size > (1u << 20)) throw capability_error("abelian group is too large to enumerate");
  size_ = static_cast<uint32_t>(size);
  exponent_ = expo;
}

uint32_t AbelianGroup::mul(uint32_t a, uint32_t b) const {
  uint32_t out = 0, radix = 1;
  for (uint32_t d : orders_) {
    uint32_t xa = a % d, xb = b % d;
    a /= d;
    b /= d;
    out += ((xa + xb) % d) * radix;
    radix *= d;
  }
  return out;
}

uint32_t AbelianGroup::inv(uint32_t a) const {
  uint32_t out = 0, radix = 1;
  for (uint32_t d : orders_) {
    uint32_t xa = a % d;
    a /= d;
    out += ((d - xa) % d) * radix;
    radix *= d;
  }
  return out;
}

std::vector<uint32_t> AbelianGroup::tuple_of(uint32_t index) const {
  std::vector<uint32_t> t(orders_.size());
  for (size_t i = 0; i < orders_.size(); ++i) {
    t[i] = index % orders_[i];
    index /= orders_[i];
  }
  return t;
}

uint32_t AbelianGroup::index_of(const std::vector<uint32_t>& tuple) const {
  if (tuple.size() != orders_.size()) throw usage_error("H element tuple has wrong length");
  uint32_t out = 0;
  for (size_t i = orders_.size(); i-- > 0;) {
    if (tuple[i] >= orders_[i]) throw usage_error("H element exponent out of range");
    out = out * orders_[i] + tuple[i];
  }
  return out;
}

std::vector<uint32_t> AbelianGroup::generators() const {
  std::vector<uint32_t> gens;
  uint32_t radix = 1;
  for (uint32_t d : orders_) {
    if (d > 1) gens.push_back(radix);
    radix *= d;
  }
  return gens;
}

uint32_t AbelianGroup::char_exponent(uint32_t a, uint32_t h, uint32_t n) const {
  if (n % exponent_ != 0) throw usage_error("ambient order must be divisible by exp(H)");
  uint64_t e = 0;
  for (uint32_t d : orders_) {
    uint64_t xa = a % d, xh = h % d;
    a /= d;
    h /= d;
    e += xa * xh % d * (n / d);
  }
  return static_cast<uint32_t>(e % n);
}

HView::HView(std::shared_ptr<const AbelianGroup> root, std::vector<uint32_t> elems,
             std::vector<uint32_t> gen_roots)
    : root_(std::move(root)), elems_(std::move(elems)) {
  pos_.assign(root_->size(), -1);
  for (uint32_t i = 0; i < elems_.size(); ++i) pos_[elems_[i]] = static_cast<int32_t>(i);
  id_pos_ = static_cast<uint32_t>(pos_[root_->identity()]);
  uint32_t n = size();
  mul_.resize(size_t(n) * n);
  inv_.resize(n);
  for (uint32_t i = 0; i < n; ++i) {
    inv_[i] = static_cast<uint32_t>(pos_[root_->inv(elems_[i])]);
    for (uint32_t j = 0; j < n; ++j) {
      int32_t p = pos_[root_->mul(elems_[i], elems_[j])];
      if (p < 0) throw consistency_error("HView element set is not closed under multiplication");
      mul_[size_t(i) * n + j] = static_cast<uint32_t>(p);
    }
  }
  for (uint32_t g : gen_roots) gen_pos_.push_back(static_cast<uint32_t>(pos_[g]));
}

HView HView::full(std::shared_ptr<const AbelianGroup> root) {
  std::vector<uint32_t> elems(root->size());
  std::iota(elems.begin(), elems.end(), 0);
  std::vector<uint32_t> gens = root->generators();
  return HView(std::move(root), std::move(elems), std::move(gens));
}

HView HView::subgroup(std::shared_ptr<const AbelianGroup> root,
                      const std::vector<uint32_t>& generator_indices) {
  std::vector<uint32_t> elems = subgroup_closure(*root, generator_indices);
  return HView(std::move(root), std::move(elems), generator_indices);
}

bool HView::same_elements(const HView& other) const {
  return root_.get() == other.root_.get() && elems_ == other.elems_;
}

std::vector<uint32_t> subgroup_closure(const AbelianGroup& g, std::vector<uint32_t> seeds) {
  std::set<uint32_t> members{g.identity()};
  for (uint32_t s : seeds) members.insert(s);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<uint32_t> snapshot(members.begin(), members.end());
    for (uint32_t a : snapshot)
      for (uint32_t b : snapshot) {
        if (members.insert(g.mul(a, b)).second) grew = true;
        if (members.insert(g.inv(a)).second) grew = true;
      }
  }
  return {members.begin(), members.end()};
}

std::vector<std::vector<uint32_t>> all_subgroups(const AbelianGroup& g) {
  std::set<std::vector<uint32_t>> found;
  std::vector<std::vector<uint32_t>> queue;
  std::vector<uint32_t> trivial{g.identity()};
  found.insert(trivial);
  queue.push_back(trivial);
  while (!queue.empty()) {
    std::vector<uint32_t> cur = std::move(queue.back());
    queue.pop_back();
    for (uint32_t h = 0; h < g.size(); ++h) {
      if (std::binary_search(cur.begin(), cur.end(), h)) continue;
      std::vector<uint32_t> seeds = cur;
      seeds.push_back(h);
      std::vector<uint32_t> bigger = subgroup_closure(g, std::move(seeds));
      if (found.insert(bigger).second) queue.push_back(bigger);
    }
  }
  std::vector<std::vector<uint32_t>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<std::vector<uint32_t>> characters_of_subgroup(const HView& view,
                                                          const std::vector<uint32_t>& members,
                                                          uint32_t n) {
  const AbelianGroup& root = view.root();
  std::set<std::vector<uint32_t>> distinct;
  for (uint32_t a = 0; a < root.size(); ++a) {
    std::vector<uint32_t> tuple(members.size());
    for (size_t i = 0; i < members.size(); ++i)
      tuple[i] = root.char_exponent(a, view.root_index(members[i]), n);
    distinct.insert(std::move(tuple));
  }
  std::vector<std::vector<uint32_t>> out(distinct.begin(), distinct.end());
  if (out.size() != members.size())
    throw consistency_error("character count of an abelian subgroup must equal its order");
  return out;
}

}  // namespace trichar
