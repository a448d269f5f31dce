#include "hookcensus/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hookcensus {

namespace {

std::string validate_entries(const std::vector<int>& entries) {
  const int n = static_cast<int>(entries.size());
  std::vector<char> seen(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    int v = entries[i];
    if (v < 1 || v > n) {
      return "entry " + std::to_string(v) + " at position " + std::to_string(i + 1) +
             " out of range 1.." + std::to_string(n);
    }
    if (seen[v]) return "duplicate entry " + std::to_string(v);
    seen[v] = 1;
  }
  // n in-range distinct entries necessarily cover 1..n
  return {};
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  std::string err = validate_entries(entries_);
  if (!err.empty()) throw std::invalid_argument("not a permutation: " + err);
  pos_of_.resize(entries_.size());
  for (int i = 0; i < size(); ++i) pos_of_[entries_[i] - 1] = i + 1;
}

Permutation Permutation::identity(int n) {
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = i + 1;
  return Permutation(std::move(e));
}

std::optional<Permutation> Permutation::try_parse(std::string_view text, std::string* error) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : text) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) tokens.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));

  std::vector<int> entries;
  if (tokens.size() == 1 && tokens[0].size() > 1 &&
      std::all_of(tokens[0].begin(), tokens[0].end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    // compact digit string, one entry per digit
    for (char c : tokens[0]) entries.push_back(c - '0');
  } else {
    for (const auto& tok : tokens) {
      try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        entries.push_back(v);
      } catch (const std::exception&) {
        if (error) *error = "not a permutation: bad token '" + tok + "'";
        return std::nullopt;
      }
    }
  }
  std::string err = validate_entries(entries);
  if (!err.empty()) {
    if (error) *error = "not a permutation: " + err;
    return std::nullopt;
  }
  return Permutation(std::move(entries));
}

Permutation Permutation::parse(std::string_view text) {
  std::string err;
  auto p = try_parse(text, &err);
  if (!p) throw std::invalid_argument(err);
  return *p;
}

std::string Permutation::to_string() const {
  std::string out;
  if (size() <= 9) {
    for (int v : entries_) out += static_cast<char>('0' + v);
  } else {
    for (int i = 0; i < size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(entries_[i]);
    }
  }
  return out;
}

std::vector<int> descents(const Permutation& pi) {
  std::vector<int> out;
  for (int i = 1; i < pi.size(); ++i) {
    if (pi.at(i) > pi.at(i + 1)) out.push_back(i);
  }
  return out;
}

Permutation stack_sort(const Permutation& sigma) {
  std::vector<int> stack, out;
  out.reserve(sigma.size());
  for (int i = 1; i <= sigma.size(); ++i) {
    int next = sigma.at(i);
    while (!stack.empty() && next > stack.back()) {
      out.push_back(stack.back());
      stack.pop_back();
    }
    stack.push_back(next);
  }
  while (!stack.empty()) {
    out.push_back(stack.back());
    stack.pop_back();
  }
  return Permutation(std::move(out));
}

int padded_valleys(const Permutation& sigma) {
  const int n = sigma.size();
  if (n < 1) throw std::invalid_argument("padded_valleys: permutation must be nonempty");
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    bool below_left = (i == 1) || sigma.at(i) < sigma.at(i - 1);
    bool below_right = (i == n) || sigma.at(i) < sigma.at(i + 1);
    if (below_left && below_right) ++count;
  }
  return count;
}

namespace {

DaryTree symmetric_order_range(const Permutation& sigma, int lo, int hi) {
  int max_pos = lo;
  for (int i = lo + 1; i <= hi; ++i) {
    if (sigma.at(i) > sigma.at(max_pos)) max_pos = i;
  }
  DaryTree t;
  t.label = sigma.at(max_pos);
  t.arity = 2;
  if (lo < max_pos) {
    t.children.push_back(symmetric_order_range(sigma, lo, max_pos - 1));
    t.slots.push_back(0);
  }
  if (max_pos < hi) {
    t.children.push_back(symmetric_order_range(sigma, max_pos + 1, hi));
    t.slots.push_back(1);
  }
  return t;
}

}  // namespace

DaryTree symmetric_order_inverse(const Permutation& sigma) {
  if (sigma.size() < 1) {
    throw std::invalid_argument("symmetric_order_inverse: permutation must be nonempty");
  }
  return symmetric_order_range(sigma, 1, sigma.size());
}

}  // namespace hookcensus
