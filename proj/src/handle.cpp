#include "handlecalc/handle.hpp"

#include <algorithm>
#include <set>

#include "handlecalc/linalg.hpp"

namespace handlecalc {

namespace {

Index find_index(const std::vector<std::string>& ids, const std::string& id) {
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) return -1;
  return static_cast<Index>(it - ids.begin());
}

IntegerMatrix drop_row_col(const IntegerMatrix& m, Index k) {
  const Index n = m.rows();
  IntegerMatrix out(n - 1, n - 1);
  for (Index i = 0, oi = 0; i < n; ++i) {
    if (i == k) continue;
    for (Index j = 0, oj = 0; j < n; ++j) {
      if (j == k) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

IntegerMatrix drop_row(const IntegerMatrix& m, Index k) {
  IntegerMatrix out(m.rows() - 1, m.cols());
  for (Index i = 0, oi = 0; i < m.rows(); ++i) {
    if (i != k) out.row(oi++) = m.row(i);
  }
  return out;
}

IntegerMatrix drop_col(const IntegerMatrix& m, Index k) {
  IntegerMatrix out(m.rows(), m.cols() - 1);
  for (Index j = 0, oj = 0; j < m.cols(); ++j) {
    if (j != k) out.col(oj++) = m.col(j);
  }
  return out;
}

}  // namespace

bool HandleDecomposition::has_one_handle(const std::string& id) const {
  return find_index(one_handles_, id) >= 0;
}

bool HandleDecomposition::has_two_handle(const std::string& id) const {
  return find_index(two_handles_, id) >= 0;
}

Index HandleDecomposition::one_index(const std::string& id) const {
  const Index i = find_index(one_handles_, id);
  if (i < 0) throw UnknownHandle(id);
  return i;
}

Index HandleDecomposition::two_index(const std::string& id) const {
  const Index i = find_index(two_handles_, id);
  if (i < 0) throw UnknownHandle(id);
  return i;
}

BigInt HandleDecomposition::framing(const std::string& k) const {
  const Index i = two_index(k);
  return linking_(i, i);
}

BigInt HandleDecomposition::link(const std::string& a, const std::string& b) const {
  if (a == b) throw InvalidMove("self-linking of '" + a + "' is its framing");
  return linking_(two_index(a), two_index(b));
}

BigInt HandleDecomposition::run_through(const std::string& k, const std::string& h) const {
  return run_through_(two_index(k), one_index(h));
}

void HandleDecomposition::check_fresh(const std::string& id) const {
  if (id.empty()) throw Error("empty handle identifier");
  if (has_id(id)) throw Error("duplicate handle identifier '" + id + "'");
}

void HandleDecomposition::add_one_handle(const std::string& id) {
  check_fresh(id);
  one_handles_.push_back(id);
  run_through_.conservativeResize(num_two_handles(), num_one_handles());
  run_through_.col(num_one_handles() - 1).setZero();
}

void HandleDecomposition::add_two_handle(const std::string& id, const BigInt& framing) {
  check_fresh(id);
  two_handles_.push_back(id);
  const Index n = num_two_handles();
  linking_.conservativeResize(n, n);
  linking_.row(n - 1).setZero();
  linking_.col(n - 1).setZero();
  linking_(n - 1, n - 1) = framing;
  run_through_.conservativeResize(n, num_one_handles());
  run_through_.row(n - 1).setZero();
}

void HandleDecomposition::set_framing(const std::string& k, const BigInt& framing) {
  const Index i = two_index(k);
  linking_(i, i) = framing;
}

void HandleDecomposition::set_link(const std::string& a, const std::string& b,
                                   const BigInt& value) {
  if (a == b) throw InvalidMove("self-linking of '" + a + "' is its framing");
  const Index i = two_index(a);
  const Index j = two_index(b);
  linking_(i, j) = value;
  linking_(j, i) = value;
}

void HandleDecomposition::set_run_through(const std::string& k, const std::string& h,
                                          const BigInt& value) {
  run_through_(two_index(k), one_index(h)) = value;
}

void HandleDecomposition::set_three_handle_count(long count) {
  if (count < 0) throw Error("negative 3-handle count");
  three_handles_ = count;
}

void HandleDecomposition::remove_one_handle(const std::string& id) {
  const Index i = one_index(id);
  run_through_ = drop_col(run_through_, i);
  one_handles_.erase(one_handles_.begin() + i);
}

void HandleDecomposition::remove_two_handle(const std::string& id) {
  const Index i = two_index(id);
  linking_ = drop_row_col(linking_, i);
  run_through_ = drop_row(run_through_, i);
  two_handles_.erase(two_handles_.begin() + i);
}

void HandleDecomposition::rename(const std::string& from, const std::string& to) {
  if (from == to) return;
  check_fresh(to);
  Index i = find_index(one_handles_, from);
  if (i >= 0) {
    one_handles_[static_cast<std::size_t>(i)] = to;
    return;
  }
  two_handles_[static_cast<std::size_t>(two_index(from))] = to;
}

HandleDecomposition HandleDecomposition::from_matrices(std::string name,
                                                       std::vector<std::string> one_handles,
                                                       std::vector<std::string> two_handles,
                                                       IntegerMatrix linking,
                                                       IntegerMatrix run_through,
                                                       long three_handles) {
  const auto n1 = static_cast<Index>(one_handles.size());
  const auto n2 = static_cast<Index>(two_handles.size());
  if (linking.rows() != n2 || linking.cols() != n2) throw Error("linking matrix has wrong shape");
  if (run_through.rows() != n2 || run_through.cols() != n1)
    throw Error("run-through matrix has wrong shape");
  if (n2 > 0 && linking != linking.transpose()) throw Error("linking matrix is not symmetric");
  std::set<std::string> seen;
  for (const auto& id : one_handles) {
    if (id.empty() || !seen.insert(id).second) throw Error("duplicate handle identifier '" + id + "'");
  }
  for (const auto& id : two_handles) {
    if (id.empty() || !seen.insert(id).second) throw Error("duplicate handle identifier '" + id + "'");
  }
  HandleDecomposition d(std::move(name));
  d.one_handles_ = std::move(one_handles);
  d.two_handles_ = std::move(two_handles);
  d.linking_ = std::move(linking);
  d.run_through_ = std::move(run_through);
  d.set_three_handle_count(three_handles);
  return d;
}

bool HandleDecomposition::operator==(const HandleDecomposition& other) const {
  return one_handles_ == other.one_handles_ && two_handles_ == other.two_handles_ &&
         three_handles_ == other.three_handles_ && same_matrix(linking_, other.linking_) &&
         same_matrix(run_through_, other.run_through_);
}

HandleDecomposition handle_slide(const HandleDecomposition& d, const std::string& a,
                                 const std::string& b, int sign) {
  if (sign != 1 && sign != -1) throw InvalidMove("slide sign must be +1 or -1");
  if (a == b) throw InvalidMove("cannot slide a handle over itself");
  const Index ia = d.two_index(a);
  const Index ib = d.two_index(b);
  IntegerMatrix q = d.linking_matrix();
  IntegerMatrix r = d.run_through_matrix();
  const BigInt s = sign;
  q.row(ia) += s * q.row(ib);
  q.col(ia) += s * q.col(ib);
  if (r.cols() > 0) r.row(ia) += s * r.row(ib);
  return HandleDecomposition::from_matrices(d.name(), d.one_handles(), d.two_handles(),
                                            std::move(q), std::move(r),
                                            d.three_handle_count());
}

std::string next_exceptional_id(const HandleDecomposition& d) {
  for (int i = 1;; ++i) {
    std::string id = "e" + std::to_string(i);
    if (!d.has_id(id)) return id;
  }
}

HandleDecomposition blow_up(const HandleDecomposition& d,
                            const std::vector<std::pair<std::string, BigInt>>& attachments,
                            const std::string& id) {
  const std::string e = id.empty() ? next_exceptional_id(d) : id;
  HandleDecomposition out = d;
  std::vector<std::pair<Index, BigInt>> m;
  for (const auto& [k, value] : attachments) m.emplace_back(d.two_index(k), value);
  out.add_two_handle(e, BigInt(-1));
  IntegerMatrix q = out.linking_matrix();
  const Index ie = q.rows() - 1;
  for (const auto& [i, value] : m) {
    q(i, ie) += value;
    q(ie, i) += value;
  }
  // Passing strands through a -1 unknot shifts their framings and links.
  for (Index i = 0; i < ie; ++i) {
    for (Index j = 0; j < ie; ++j) q(i, j) -= q(i, ie) * q(j, ie);
  }
  return HandleDecomposition::from_matrices(out.name(), out.one_handles(), out.two_handles(),
                                            std::move(q), out.run_through_matrix(),
                                            out.three_handle_count());
}

HandleDecomposition blow_down(const HandleDecomposition& d, const std::string& e) {
  const Index ie = d.two_index(e);
  if (d.linking_matrix()(ie, ie) != -1) throw InvalidMove("'" + e + "' is not -1-framed");
  for (Index j = 0; j < d.num_one_handles(); ++j) {
    if (d.run_through_matrix()(ie, j) != 0)
      throw InvalidMove("'" + e + "' runs through a 1-handle");
  }
  IntegerMatrix q = d.linking_matrix();
  for (Index i = 0; i < q.rows(); ++i) {
    if (i == ie) continue;
    for (Index j = 0; j < q.cols(); ++j) {
      if (j == ie) continue;
      q(i, j) += d.linking_matrix()(i, ie) * d.linking_matrix()(j, ie);
    }
  }
  HandleDecomposition out = HandleDecomposition::from_matrices(
      d.name(), d.one_handles(), d.two_handles(), std::move(q), d.run_through_matrix(),
      d.three_handle_count());
  out.remove_two_handle(e);
  return out;
}

HandleDecomposition dot_zero_swap(const HandleDecomposition& d, const std::string& h,
                                  const std::string& k) {
  const Index ih = d.one_index(h);
  const Index ik = d.two_index(k);
  const IntegerMatrix& q = d.linking_matrix();
  const IntegerMatrix& r = d.run_through_matrix();
  if (q(ik, ik) != 0) throw InvalidMove("'" + k + "' is not 0-framed");
  for (Index j = 0; j < d.num_one_handles(); ++j) {
    if (j != ih && r(ik, j) != 0)
      throw InvalidMove("'" + k + "' runs through a 1-handle other than '" + h + "'");
  }

  // Row/column ik of the new linking matrix is the old column ih of the
  // run-through matrix, and vice versa.
  IntegerMatrix q2 = q;
  IntegerMatrix r2 = r;
  for (Index i = 0; i < q.rows(); ++i) {
    if (i == ik) continue;
    q2(i, ik) = r(i, ih);
    q2(ik, i) = r(i, ih);
    r2(i, ih) = q(i, ik);
  }
  q2(ik, ik) = 0;
  r2(ik, ih) = r(ik, ih);

  std::vector<std::string> ones = d.one_handles();
  std::vector<std::string> twos = d.two_handles();
  ones[static_cast<std::size_t>(ih)] = k;
  twos[static_cast<std::size_t>(ik)] = h;
  return HandleDecomposition::from_matrices(d.name(), std::move(ones), std::move(twos),
                                            std::move(q2), std::move(r2),
                                            d.three_handle_count());
}

HandleDecomposition reverse_orientation(const HandleDecomposition& d, const std::string& k) {
  const Index i = d.two_index(k);
  IntegerMatrix q = d.linking_matrix();
  IntegerMatrix r = d.run_through_matrix();
  q.row(i) = -q.row(i);
  q.col(i) = -q.col(i);
  if (r.cols() > 0) r.row(i) = -r.row(i);
  return HandleDecomposition::from_matrices(d.name(), d.one_handles(), d.two_handles(),
                                            std::move(q), std::move(r),
                                            d.three_handle_count());
}

HandleDecomposition with_prefix(const HandleDecomposition& d, const std::string& prefix) {
  std::vector<std::string> ones, twos;
  for (const auto& id : d.one_handles()) ones.push_back(prefix + id);
  for (const auto& id : d.two_handles()) twos.push_back(prefix + id);
  return HandleDecomposition::from_matrices(d.name(), std::move(ones), std::move(twos),
                                            d.linking_matrix(), d.run_through_matrix(),
                                            d.three_handle_count());
}

HandleDecomposition boundary_sum(const HandleDecomposition& d1, const HandleDecomposition& d2) {
  std::set<std::string> taken(d1.one_handles().begin(), d1.one_handles().end());
  taken.insert(d1.two_handles().begin(), d1.two_handles().end());
  std::set<std::string> own(d2.one_handles().begin(), d2.one_handles().end());
  own.insert(d2.two_handles().begin(), d2.two_handles().end());

  auto fresh = [&](const std::string& id) {
    if (!taken.count(id)) {
      taken.insert(id);
      return id;
    }
    for (int k = 2;; ++k) {
      std::string candidate = id + "_" + std::to_string(k);
      if (!taken.count(candidate) && !own.count(candidate)) {
        taken.insert(candidate);
        return candidate;
      }
    }
  };

  std::vector<std::string> ones = d1.one_handles();
  std::vector<std::string> twos = d1.two_handles();
  for (const auto& id : d2.one_handles()) ones.push_back(fresh(id));
  for (const auto& id : d2.two_handles()) twos.push_back(fresh(id));

  const IntegerMatrix q = block_diagonal(d1.linking_matrix(), d2.linking_matrix());
  const IntegerMatrix r = block_diagonal(d1.run_through_matrix(), d2.run_through_matrix());
  std::string name = d1.name().empty() ? d2.name()
                     : d2.name().empty() ? d1.name()
                                         : d1.name() + "+" + d2.name();
  return HandleDecomposition::from_matrices(std::move(name), std::move(ones), std::move(twos), q,
                                            r,
                                            d1.three_handle_count() + d2.three_handle_count());
}

std::string cp_pattern_violation(const HandleDecomposition& d,
                                 const std::vector<std::string>& chain, int p) {
  if (p < 2) return "p must be at least 2";
  if (static_cast<int>(chain.size()) != p - 1)
    return "chain must have " + std::to_string(p - 1) + " handles";
  std::vector<Index> idx;
  for (const auto& id : chain) {
    if (!d.has_two_handle(id)) return "'" + id + "' is not a 2-handle";
    idx.push_back(d.two_index(id));
  }
  std::set<Index> distinct(idx.begin(), idx.end());
  if (distinct.size() != idx.size()) return "chain repeats a handle";
  const IntegerMatrix& q = d.linking_matrix();
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const BigInt expected = i == 0 ? BigInt(-(p + 2)) : BigInt(-2);
    if (q(idx[i], idx[i]) != expected)
      return "'" + chain[i] + "' has framing " + q(idx[i], idx[i]).str() + ", expected " +
             expected.str();
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      const BigInt expected_link = j == i + 1 ? BigInt(1) : BigInt(0);
      if (q(idx[i], idx[j]) != expected_link)
        return "link(" + chain[i] + "," + chain[j] + ") is " + q(idx[i], idx[j]).str() +
               ", expected " + expected_link.str();
    }
    for (Index h = 0; h < d.num_one_handles(); ++h) {
      if (d.run_through_matrix()(idx[i], h) != 0)
        return "'" + chain[i] + "' runs through a 1-handle";
    }
  }
  return "";
}

HandleDecomposition rational_blowdown_splice(const HandleDecomposition& d,
                                             const std::vector<std::string>& chain, int p,
                                             const std::string& prefix) {
  const std::string violation = cp_pattern_violation(d, chain, p);
  if (!violation.empty()) throw InvalidMove("not a C_p chain: " + violation);
  const std::set<std::string> members(chain.begin(), chain.end());
  for (const auto& id : d.two_handles()) {
    if (members.count(id)) continue;
    for (const auto& c : chain) {
      if (d.link(id, c) != 0)
        throw InvalidMove("'" + id + "' links chain member '" + c + "'");
    }
  }
  HandleDecomposition out = d;
  for (const auto& c : chain) out.remove_two_handle(c);
  const std::string b0 = prefix + "0";
  const std::string b1 = prefix + "1";
  out.add_one_handle(b0);
  out.add_two_handle(b1, BigInt(p - 1));
  out.set_run_through(b1, b0, BigInt(p));
  return out;
}

}  // namespace handlecalc
