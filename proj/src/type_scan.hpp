#pragma once

// Internal engine: enumerates the image sequences of all permutations with a
// prescribed cycle type, in exact lexicographic order.
//
// Positions are assigned in order 0,1,...,d-1, candidate values ascending.
// The partial graph i -> img[i] is a disjoint union of finished cycles and
// open chains; assigning img[p] = v either closes the chain ending at p (when
// v is that chain's start, consuming one cycle length) or splices the chain
// starting at v onto it. A candidate is descended into only when the open
// chains can still be packed into the remaining cycle lengths, so every
// explored branch produces at least one output. A full assignment has closed
// every cycle against the part multiset, which makes the emitted type correct
// by construction.

#include <algorithm>
#include <vector>

namespace hurwitz::detail {

class TypeScan {
 public:
  TypeScan(const std::vector<int>& parts, int degree) : d_(degree) {
    part_cnt_.assign(static_cast<size_t>(d_) + 1, 0);
    for (int k : parts) part_cnt_[static_cast<size_t>(k)]++;
    uniform_k_ = parts.empty() ? 0 : parts.front();
    for (int k : parts) {
      if (k != uniform_k_) {
        uniform_k_ = 0;
        break;
      }
    }
    item_cnt_.assign(static_cast<size_t>(d_) + 2, 0);
    img_.assign(static_cast<size_t>(d_), -1);
    pre_.assign(static_cast<size_t>(d_), -1);
    start_of_end_.resize(static_cast<size_t>(d_));
    end_of_start_.resize(static_cast<size_t>(d_));
    len_of_start_.resize(static_cast<size_t>(d_));
    base_part_cnt_ = part_cnt_;
    base_parts_left_ = static_cast<int>(parts.size());
  }

  // Visits image arrays in lexicographic order; visit returns false to stop.
  // root_allow filters the value at position 0; prefix pins positions
  // 0..prefix->size()-1 (assignments must be feasible, as produced by
  // prefixes()). Returns false iff the visitor aborted.
  template <class Visit>
  bool run(Visit&& visit, const std::vector<char>* root_allow = nullptr,
           const std::vector<int>* prefix = nullptr) {
    reset();
    int start = 0;
    if (prefix) {
      for (int p = 0; p < static_cast<int>(prefix->size()); ++p) {
        Undo u;
        if (!try_assign(p, (*prefix)[static_cast<size_t>(p)], u)) return true;
      }
      start = static_cast<int>(prefix->size());
    }
    return rec(start, visit, prefix ? nullptr : root_allow);
  }

  // All feasible assignments to positions 0..len-1, lexicographic order.
  std::vector<std::vector<int>> prefixes(int len, const std::vector<char>* root_allow = nullptr) {
    std::vector<std::vector<int>> out;
    if (len <= 0) return out;
    len = std::min(len, d_);
    reset();
    collect_prefixes(0, len, root_allow, out);
    return out;
  }

 private:
  struct Undo {
    bool close = false;
    int p = -1, v = -1;
    int s_p = -1, e_v = -1;
    int len_p = 0, len_v = 0;
    int saved_max_part = 0;
  };

  void reset() {
    part_cnt_ = base_part_cnt_;
    parts_left_ = base_parts_left_;
    max_part_left_ = 0;
    for (int k = d_; k >= 1; --k) {
      if (part_cnt_[static_cast<size_t>(k)] > 0) {
        max_part_left_ = k;
        break;
      }
    }
    std::fill(item_cnt_.begin(), item_cnt_.end(), 0);
    n_items_ = 0;
    std::fill(img_.begin(), img_.end(), -1);
    std::fill(pre_.begin(), pre_.end(), -1);
    for (int x = 0; x < d_; ++x) {
      start_of_end_[static_cast<size_t>(x)] = x;
      end_of_start_[static_cast<size_t>(x)] = x;
      len_of_start_[static_cast<size_t>(x)] = 1;
    }
  }

  template <class Visit>
  bool rec(int p, Visit& visit, const std::vector<char>* root_allow) {
    if (p == d_) return visit(static_cast<const std::vector<int>&>(img_));
    for (int v = 0; v < d_; ++v) {
      if (pre_[static_cast<size_t>(v)] != -1) continue;
      if (p == 0 && root_allow && !(*root_allow)[static_cast<size_t>(v)]) continue;
      Undo u;
      if (!try_assign(p, v, u)) continue;
      bool keep_going = rec(p + 1, visit, root_allow);
      undo_assign(u);
      if (!keep_going) return false;
    }
    return true;
  }

  void collect_prefixes(int p, int len, const std::vector<char>* root_allow,
                        std::vector<std::vector<int>>& out) {
    if (p == len) {
      out.emplace_back(img_.begin(), img_.begin() + len);
      return;
    }
    for (int v = 0; v < d_; ++v) {
      if (pre_[static_cast<size_t>(v)] != -1) continue;
      if (p == 0 && root_allow && !(*root_allow)[static_cast<size_t>(v)]) continue;
      Undo u;
      if (!try_assign(p, v, u)) continue;
      collect_prefixes(p + 1, len, root_allow, out);
      undo_assign(u);
    }
  }

  bool try_assign(int p, int v, Undo& u) {
    int s_p = start_of_end_[static_cast<size_t>(p)];
    int len_p = len_of_start_[static_cast<size_t>(s_p)];
    if (v == s_p) {
      if (part_cnt_[static_cast<size_t>(len_p)] == 0) return false;
      u.close = true;
      u.p = p;
      u.v = v;
      u.s_p = s_p;
      u.len_p = len_p;
      u.saved_max_part = max_part_left_;
      img_[static_cast<size_t>(p)] = v;
      pre_[static_cast<size_t>(v)] = p;
      part_cnt_[static_cast<size_t>(len_p)]--;
      parts_left_--;
      if (len_p >= 2) {
        item_cnt_[static_cast<size_t>(len_p)]--;
        n_items_--;
      }
      if (len_p == max_part_left_ && part_cnt_[static_cast<size_t>(len_p)] == 0) {
        max_part_left_ = 0;
        for (int k = len_p; k >= 1; --k) {
          if (part_cnt_[static_cast<size_t>(k)] > 0) {
            max_part_left_ = k;
            break;
          }
        }
      }
      // Closing a cycle against an exact-size part never breaks feasibility.
      return true;
    }
    int e_v = end_of_start_[static_cast<size_t>(v)];
    int len_v = len_of_start_[static_cast<size_t>(v)];
    int new_len = len_p + len_v;
    if (new_len > max_part_left_) return false;
    u.close = false;
    u.p = p;
    u.v = v;
    u.s_p = s_p;
    u.e_v = e_v;
    u.len_p = len_p;
    u.len_v = len_v;
    img_[static_cast<size_t>(p)] = v;
    pre_[static_cast<size_t>(v)] = p;
    end_of_start_[static_cast<size_t>(s_p)] = e_v;
    start_of_end_[static_cast<size_t>(e_v)] = s_p;
    len_of_start_[static_cast<size_t>(s_p)] = new_len;
    if (len_p >= 2) {
      item_cnt_[static_cast<size_t>(len_p)]--;
      n_items_--;
    }
    if (len_v >= 2) {
      item_cnt_[static_cast<size_t>(len_v)]--;
      n_items_--;
    }
    item_cnt_[static_cast<size_t>(new_len)]++;
    n_items_++;
    if (packing_feasible()) return true;
    undo_assign(u);
    return false;
  }

  void undo_assign(const Undo& u) {
    if (u.close) {
      img_[static_cast<size_t>(u.p)] = -1;
      pre_[static_cast<size_t>(u.v)] = -1;
      part_cnt_[static_cast<size_t>(u.len_p)]++;
      parts_left_++;
      if (u.len_p >= 2) {
        item_cnt_[static_cast<size_t>(u.len_p)]++;
        n_items_++;
      }
      max_part_left_ = u.saved_max_part;
      return;
    }
    img_[static_cast<size_t>(u.p)] = -1;
    pre_[static_cast<size_t>(u.v)] = -1;
    end_of_start_[static_cast<size_t>(u.s_p)] = u.p;
    start_of_end_[static_cast<size_t>(u.e_v)] = u.v;
    len_of_start_[static_cast<size_t>(u.s_p)] = u.len_p;
    int new_len = u.len_p + u.len_v;
    item_cnt_[static_cast<size_t>(new_len)]--;
    n_items_--;
    if (u.len_p >= 2) {
      item_cnt_[static_cast<size_t>(u.len_p)]++;
      n_items_++;
    }
    if (u.len_v >= 2) {
      item_cnt_[static_cast<size_t>(u.len_v)]++;
      n_items_++;
    }
  }

  // Can the open chains (lengths >= 2) still be packed into the remaining
  // cycle lengths, each part taking chains of total length <= part?
  bool packing_feasible() const {
    if (n_items_ == 0) return true;
    if (uniform_k_ != 0 && uniform_k_ <= 3) {
      // Parts all equal k <= 3 and chains are >= 2: one chain per part.
      return n_items_ <= parts_left_;
    }
    int min_item = 0, max_item = 0;
    for (int k = 2; k <= d_ + 1; ++k) {
      if (item_cnt_[static_cast<size_t>(k)] > 0) {
        min_item = k;
        break;
      }
    }
    for (int k = d_ + 1; k >= 2; --k) {
      if (item_cnt_[static_cast<size_t>(k)] > 0) {
        max_item = k;
        break;
      }
    }
    if (max_item > max_part_left_) return false;
    if (2 * min_item > max_part_left_) {
      // No part can take two chains: Hall condition on sorted matching.
      int cum_items = 0, cum_parts = 0;
      for (int x = d_; x >= 2; --x) {
        cum_items += item_cnt_[static_cast<size_t>(x)];
        cum_parts += part_cnt_[static_cast<size_t>(x)];
        if (cum_items > cum_parts) return false;
      }
      return true;
    }
    std::vector<int> items;
    for (int k = d_; k >= 2; --k) {
      for (int c = 0; c < item_cnt_[static_cast<size_t>(k)]; ++c) items.push_back(k);
    }
    std::vector<int> res(part_cnt_.begin(), part_cnt_.end());
    if (ffd_fits(items, res)) return true;
    res.assign(part_cnt_.begin(), part_cnt_.end());
    return exact_pack(items, 0, res);
  }

  // First-fit decreasing into the largest usable residual; success is
  // sufficient for feasibility.
  static bool ffd_fits(const std::vector<int>& items_desc, std::vector<int>& res_cnt) {
    for (int item : items_desc) {
      int chosen = -1;
      for (int v = static_cast<int>(res_cnt.size()) - 1; v >= item; --v) {
        if (res_cnt[static_cast<size_t>(v)] > 0) {
          chosen = v;
          break;
        }
      }
      if (chosen < 0) return false;
      res_cnt[static_cast<size_t>(chosen)]--;
      res_cnt[static_cast<size_t>(chosen - item)]++;
    }
    return true;
  }

  static bool exact_pack(const std::vector<int>& items_desc, size_t i, std::vector<int>& res_cnt) {
    if (i == items_desc.size()) return true;
    int item = items_desc[i];
    for (int v = static_cast<int>(res_cnt.size()) - 1; v >= item; --v) {
      if (res_cnt[static_cast<size_t>(v)] == 0) continue;
      res_cnt[static_cast<size_t>(v)]--;
      res_cnt[static_cast<size_t>(v - item)]++;
      bool ok = exact_pack(items_desc, i + 1, res_cnt);
      res_cnt[static_cast<size_t>(v - item)]--;
      res_cnt[static_cast<size_t>(v)]++;
      if (ok) return true;
    }
    return false;
  }

  int d_;
  int uniform_k_ = 0;
  std::vector<int> base_part_cnt_;
  int base_parts_left_ = 0;

  std::vector<int> part_cnt_;
  int parts_left_ = 0;
  int max_part_left_ = 0;
  std::vector<int> item_cnt_;
  int n_items_ = 0;
  std::vector<int> img_, pre_;
  std::vector<int> start_of_end_, end_of_start_, len_of_start_;
};

}  // namespace hurwitz::detail
