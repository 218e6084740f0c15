#include "cobord/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace cobord {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::key() const {
  if (parts_.empty()) return "1";
  std::string out;
  for (auto it = parts_.rbegin(); it != parts_.rend();) {
    auto run_end = std::find_if(it, parts_.rend(), [&](int p) { return p != *it; });
    const auto count = std::distance(it, run_end);
    if (!out.empty()) out += "*";
    out += "p" + std::to_string(*it);
    if (count > 1) out += "^" + std::to_string(count);
    it = run_end;
  }
  return out;
}

Partition Partition::from_key(std::string_view key) {
  if (key == "1") return Partition{};
  std::vector<int> parts;
  auto read_int = [&](std::string_view& s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr == s.data()) throw std::invalid_argument("bad partition key");
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    return value;
  };
  std::string_view rest = key;
  while (!rest.empty()) {
    if (rest.front() != 'p') throw std::invalid_argument("bad partition key");
    rest.remove_prefix(1);
    const int index = read_int(rest);
    int count = 1;
    if (!rest.empty() && rest.front() == '^') {
      rest.remove_prefix(1);
      count = read_int(rest);
    }
    if (index <= 0 || count <= 0) throw std::invalid_argument("bad partition key");
    parts.insert(parts.end(), count, index);
    if (!rest.empty()) {
      if (rest.front() != '*') throw std::invalid_argument("bad partition key");
      rest.remove_prefix(1);
    }
  }
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("negative partition weight");
  std::vector<Partition> out;
  std::vector<int> ascending;
  std::function<void(int, int)> walk = [&](int remaining, int smallest) {
    if (remaining == 0) {
      out.emplace_back(ascending);
      return;
    }
    for (int part = smallest; part <= remaining; ++part) {
      ascending.push_back(part);
      walk(remaining - part, part);
      ascending.pop_back();
    }
  };
  walk(n, 1);
  return out;
}

}  // namespace cobord
