#include "typec/hyperoctahedral.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "typec/error.hpp"

namespace typec {

  SignedPermutation::SignedPermutation(std::vector<int> images)
      : _images(std::move(images)) {
    int const         m = static_cast<int>(_images.size());
    std::vector<bool> seen(m + 1, false);
    for (int w : _images) {
      int a = std::abs(w);
      if (a < 1 || a > m || seen[a]) {
        throw Error(ErrorKind::shape_mismatch,
                    "images do not form a signed permutation");
      }
      seen[a] = true;
    }
  }

  SignedPermutation SignedPermutation::identity(unsigned m) {
    std::vector<int> images(m);
    std::iota(images.begin(), images.end(), 1);
    return SignedPermutation(std::move(images));
  }

  SignedPermutation SignedPermutation::sign_change(unsigned m) {
    auto w = identity(m);
    if (m == 0) {
      throw Error(ErrorKind::index_out_of_range, "H_0 has no generators");
    }
    w._images[0] = -1;
    return w;
  }

  SignedPermutation SignedPermutation::transposition(unsigned i, unsigned m) {
    if (i < 1 || i + 1 > m) {
      throw Error(ErrorKind::index_out_of_range,
                  "transposition index outside 1..m-1");
    }
    auto w = identity(m);
    std::swap(w._images[i - 1], w._images[i]);
    return w;
  }

  bool SignedPermutation::is_identity() const noexcept {
    for (std::size_t p = 0; p < _images.size(); ++p) {
      if (_images[p] != static_cast<int>(p + 1)) {
        return false;
      }
    }
    return true;
  }

  SignedPermutation SignedPermutation::inverse() const {
    std::vector<int> inv(_images.size());
    for (std::size_t p = 0; p < _images.size(); ++p) {
      int w              = _images[p];
      int sign           = w < 0 ? -1 : 1;
      inv[std::abs(w) - 1] = sign * static_cast<int>(p + 1);
    }
    return SignedPermutation(std::move(inv));
  }

  std::string SignedPermutation::to_string() const {
    std::string out = "[";
    for (std::size_t p = 0; p < _images.size(); ++p) {
      out += (p ? " " : "") + std::to_string(_images[p]);
    }
    return out + "]";
  }

  SignedPermutation group_compose(SignedPermutation const& u,
                                  SignedPermutation const& v) {
    if (u.m() != v.m()) {
      throw Error(ErrorKind::rank_mismatch,
                  "cannot compose elements of H_" + std::to_string(u.m())
                      + " and H_" + std::to_string(v.m()));
    }
    std::vector<int> images(u.m());
    for (unsigned p = 1; p <= u.m(); ++p) {
      int w          = u(p);
      int sign       = w < 0 ? -1 : 1;
      images[p - 1] = sign * v(static_cast<unsigned>(std::abs(w)));
    }
    return SignedPermutation(std::move(images));
  }

  std::vector<unsigned> label_permutation(SignedPermutation const& w) {
    unsigned const        m = w.m();
    std::vector<unsigned> labels(2 * m);
    for (unsigned p = 1; p <= m; ++p) {
      int      image = w(p);
      unsigned q     = static_cast<unsigned>(std::abs(image));
      if (image > 0) {
        labels[m + p - 1] = m + q;
        labels[m - p]     = m + 1 - q;
      } else {
        labels[m + p - 1] = m + 1 - q;
        labels[m - p]     = m + q;
      }
    }
    return labels;
  }

  SignedPermutation from_label_permutation(
      std::vector<unsigned> const& labels) {
    if (labels.size() % 2 != 0) {
      throw Error(ErrorKind::asymmetric_input, "odd number of labels");
    }
    unsigned const   t = static_cast<unsigned>(labels.size());
    unsigned const   m = t / 2;
    std::vector<int> images(m);
    for (unsigned p = 1; p <= m; ++p) {
      unsigned j = labels[m + p - 1];
      if (j < 1 || j > t || labels[m - p] != t + 1 - j) {
        throw Error(ErrorKind::asymmetric_input,
                    "label permutation is not mirror symmetric");
      }
      images[p - 1] = j > m ? static_cast<int>(j - m)
                            : -static_cast<int>(m + 1 - j);
    }
    return SignedPermutation(std::move(images));
  }

  BrauerDiagram to_symmetric_perm(SignedPermutation const& w) {
    unsigned const m = w.m();
    if (m == 0) {
      throw Error(ErrorKind::invalid_argument,
                  "H_0 has no diagram with positive rank");
    }
    auto                            labels = label_permutation(w);
    std::vector<BrauerDiagram::Pair> pairs;
    for (unsigned l = 0; l < 2 * m; ++l) {
      pairs.emplace_back(static_cast<BrauerDiagram::Node>(l),
                         static_cast<BrauerDiagram::Node>(2 * m + labels[l] - 1));
    }
    return BrauerDiagram(m, pairs);
  }

  SignedPermutation from_through_strands(BrauerDiagram const& d) {
    if (!is_symmetric(d)) {
      throw Error(ErrorKind::asymmetric_input,
                  "through strands of a non-symmetric diagram");
    }
    unsigned const        row = d.row_size();
    std::vector<unsigned> bottom_label(row, 0);
    unsigned              next = 0;
    for (unsigned pos = 1; pos <= row; ++pos) {
      if (d.is_top(d.partner(d.bottom(pos)))) {
        bottom_label[pos - 1] = ++next;
      }
    }
    std::vector<unsigned> labels;
    for (unsigned pos = 1; pos <= row; ++pos) {
      auto y = d.partner(d.top(pos));
      if (!d.is_top(y)) {
        labels.push_back(bottom_label[d.position(y) - 1]);
      }
    }
    return from_label_permutation(labels);
  }

  unsigned long group_order(unsigned m) {
    unsigned long order = 1;
    for (unsigned i = 1; i <= m; ++i) {
      order *= 2 * i;
    }
    return order;
  }

  std::vector<unsigned> generator_word(SignedPermutation const& w) {
    // Left multiplication by a generator acts on positions: the sign change
    // negates position 1 and (i, i + 1) swaps positions i and i + 1. Reduce
    // w to the identity that way; the letters used, in order, spell w.
    std::vector<int>      images = w.images();
    std::vector<unsigned> word;
    auto swap_positions = [&](unsigned i) {
      std::swap(images[i - 1], images[i]);
      word.push_back(i);
    };
    for (unsigned p = 1; p <= images.size(); ++p) {
      if (images[p - 1] > 0) {
        continue;
      }
      for (unsigned i = p - 1; i >= 1; --i) {
        swap_positions(i);
      }
      images[0] = -images[0];
      word.push_back(0);
      for (unsigned i = 1; i < p; ++i) {
        swap_positions(i);
      }
    }
    for (std::size_t pass = 0; pass < images.size(); ++pass) {
      for (unsigned i = 1; i < images.size(); ++i) {
        if (images[i - 1] > images[i]) {
          swap_positions(i);
        }
      }
    }
    return word;
  }

  std::vector<SignedPermutation> enumerate_group(unsigned m) {
    if (m > max_group_rank()) {
      throw Error(ErrorKind::resource_limit,
                  "group enumeration above rank "
                      + std::to_string(max_group_rank())
                      + " (raise TYPEC_MAX_GROUP_RANK)");
    }
    std::vector<SignedPermutation> result;
    result.reserve(group_order(m));
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      for (unsigned signs = 0; signs < (1u << m); ++signs) {
        std::vector<int> images(perm);
        for (unsigned p = 0; p < m; ++p) {
          if (signs & (1u << p)) {
            images[p] = -images[p];
          }
        }
        result.emplace_back(std::move(images));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(result.begin(), result.end());
    return result;
  }

}  // namespace typec
