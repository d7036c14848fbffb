#include "unipmn/mn_engine.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#include "text.hpp"
#include "unipmn/errors.hpp"

namespace unipmn {

namespace {

bool even_defect(const Symbol& s) { return defect(s) % 2 == 0; }

void check_contract(const Symbol& s, const BiPartition& bp, Family family) {
  const int r = rank(s);
  if (r != bipartition_size(bp)) {
    throw ContractError("symbol " + s.to_string() + " has rank " + std::to_string(r) + " but class (" +
                        bp.to_string() + ") has size " + std::to_string(bipartition_size(bp)));
  }
  const SymbolTag tag = kind(s).tag;
  const bool ok = [&] {
    switch (family) {
      case Family::B:
      case Family::C: return tag == SymbolTag::BC;
      case Family::Dplus: return tag == SymbolTag::DPlus && validate_class(bp, family);
      case Family::Dminus: return tag == SymbolTag::DMinus && validate_class(bp, family);
    }
    return false;
  }();
  if (!ok) {
    throw ContractError("symbol " + s.to_string() + " (defect " + std::to_string(defect(s)) + ") and class (" +
                        bp.to_string() + ") do not fit family " + std::string(family_name(family)));
  }
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw InternalError("character value overflows 64 bits");
  return out;
}

std::int64_t base_value(const Symbol& canonical) {
  const bool empty_pair = canonical.x().empty() && canonical.y().empty();
  const bool single_zero = canonical.x() == std::vector<int>{0} && canonical.y().empty();
  if (!empty_pair && !single_zero) throw InternalError("unexpected rank-0 symbol " + canonical.to_string());
  return 1;
}

// Hooks keep the tag; cohooks keep BC and swap D+ <-> D-.
void check_transition(const Symbol& from, const Symbol& to, bool cohook) {
  const SymbolTag a = kind(from).tag;
  const SymbolTag b = kind(to).tag;
  const bool good = a == SymbolTag::BC ? b == SymbolTag::BC : (cohook ? a != b && b != SymbolTag::BC : a == b);
  if (!good) throw InternalError("defect bookkeeping broken at " + from.to_string() + " -> " + to.to_string());
}

std::string memo_key(const Symbol& canonical, const std::vector<int>& lambda, const std::vector<int>& mu) {
  std::string key = canonical.to_string();
  key += '\t';
  key += detail::join_ints(lambda);
  key += '|';
  key += detail::join_ints(mu);
  return key;
}

CharacterValue finish(const Symbol& s, const BiPartition& bp, Family family, std::int64_t v) {
  return CharacterValue{v, kind(s).degenerate, family == Family::Dplus && is_degenerate_class(bp)};
}

}  // namespace

std::int64_t Engine::eval(const Symbol& canonical, std::vector<int>& lambda, std::vector<int>& mu) {
  if (lambda.empty() && mu.empty()) return base_value(canonical);
  const std::string key = memo_key(canonical, lambda, mu);
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  // Largest part first; λ wins ties.
  const bool take_mu = !mu.empty() && (lambda.empty() || mu.front() > lambda.front());
  std::vector<int>& parts = take_mu ? mu : lambda;
  const int d = parts.front();
  parts.erase(parts.begin());

  std::vector<HookMove> moves;
  if (take_mu) {
    raw_cohooks(canonical, d, moves);
  } else {
    raw_hooks(canonical, d, moves);
  }
  std::int64_t sum = 0;
  for (auto& mv : moves) {
    const Symbol next = normalize(mv.result);
    check_transition(canonical, next, take_mu);
    const std::int64_t sub = eval(next, lambda, mu);
    sum = checked_add(sum, mv.sign * sub);
  }
  if (take_mu && even_defect(canonical)) sum = -sum;

  parts.insert(parts.begin(), d);
  std::unique_lock lock(mutex_);
  if (memo_.emplace(key, sum).second) unsaved_.push_back(key);
  return sum;
}

CharacterValue Engine::value(const Symbol& s, const BiPartition& bp, Family family) {
  check_contract(s, bp, family);
  std::vector<int> lambda = bp.lambda.parts();
  std::vector<int> mu = bp.mu.parts();
  return finish(s, bp, family, eval(normalize(s), lambda, mu));
}

std::size_t Engine::load_cache(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return 0;
  std::size_t count = 0;
  std::string line;
  std::size_t lineno = 0;
  std::unique_lock lock(mutex_);
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, '\t')) fields.push_back(f);
    const std::string where = path.string() + ":" + std::to_string(lineno);
    if (fields.size() != 4) throw ParseError(where + ": expected 4 tab-separated fields");
    const Symbol s = normalize(parse_symbol(fields[0]));
    const BiPartition bp = parse_bipartition(fields[1]);
    if (fields[2] != tag_name(kind(s).tag)) throw ParseError(where + ": family does not match symbol defect");
    if (rank(s) != bipartition_size(bp)) throw ParseError(where + ": rank and class size differ");
    std::int64_t v = 0;
    try {
      std::size_t used = 0;
      v = std::stoll(fields[3], &used);
      if (used != fields[3].size()) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError(where + ": bad value \"" + fields[3] + "\"");
    }
    const std::string key = memo_key(s, bp.lambda.parts(), bp.mu.parts());
    auto [it, inserted] = memo_.emplace(key, v);
    if (!inserted && it->second != v) throw ParseError(where + ": conflicting value for " + key);
    ++count;
  }
  // Everything now in memory either came from this file or was computed
  // earlier; keep the latter pending.
  return count;
}

std::size_t Engine::save_cache(const std::filesystem::path& path) {
  std::vector<std::string> keys;
  std::string payload;
  {
    std::unique_lock lock(mutex_);
    keys.swap(unsaved_);
    std::sort(keys.begin(), keys.end());
    for (const auto& key : keys) {
      const auto tab = key.find('\t');
      const Symbol s = parse_symbol(key.substr(0, tab));
      payload += key.substr(0, tab);
      payload += '\t';
      payload += key.substr(tab + 1);
      payload += '\t';
      payload += tag_name(kind(s).tag);
      payload += '\t';
      payload += std::to_string(memo_.at(key));
      payload += '\n';
    }
  }
  if (keys.empty()) return 0;
  // Single O_APPEND write so concurrent writers never interleave lines.
  const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
  if (fd < 0) throw DomainError("cannot open cache " + path.string() + ": " + std::strerror(errno));
  std::size_t off = 0;
  while (off < payload.size()) {
    const ssize_t w = ::write(fd, payload.data() + off, payload.size() - off);
    if (w < 0) {
      if (errno == EINTR) continue;
      ::close(fd);
      throw DomainError("cannot write cache " + path.string() + ": " + std::strerror(errno));
    }
    off += static_cast<std::size_t>(w);
  }
  ::close(fd);
  return keys.size();
}

std::size_t Engine::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

void Engine::clear() {
  std::unique_lock lock(mutex_);
  memo_.clear();
  unsaved_.clear();
}

Engine& default_engine() {
  static Engine engine;
  return engine;
}

CharacterValue value(const Symbol& s, const BiPartition& bp, Family family) {
  return default_engine().value(s, bp, family);
}

// ---------------------------------------------------------------- oracle

namespace {

struct Part {
  int size;
  bool mu;
  friend auto operator<=>(const Part&, const Part&) = default;
};

std::int64_t eval_order(const Symbol& canonical, const std::vector<Part>& order, std::size_t i) {
  if (i == order.size()) return base_value(canonical);
  const Part p = order[i];
  std::vector<HookMove> moves;
  if (p.mu) {
    raw_cohooks(canonical, p.size, moves);
  } else {
    raw_hooks(canonical, p.size, moves);
  }
  std::int64_t sum = 0;
  for (auto& mv : moves) {
    const Symbol next = normalize(mv.result);
    check_transition(canonical, next, p.mu);
    sum = checked_add(sum, mv.sign * eval_order(next, order, i + 1));
  }
  return p.mu && even_defect(canonical) ? -sum : sum;
}

}  // namespace

CharacterValue value_oracle(const Symbol& s, const BiPartition& bp, Family family) {
  check_contract(s, bp, family);
  std::vector<Part> order;
  for (int l : bp.lambda.parts()) order.push_back({l, false});
  for (int m : bp.mu.parts()) order.push_back({m, true});
  std::sort(order.begin(), order.end());
  const Symbol start = normalize(s);
  std::int64_t first = 0;
  bool have = false;
  do {
    const std::int64_t v = eval_order(start, order, 0);
    if (!have) {
      first = v;
      have = true;
    } else if (v != first) {
      throw InternalError("removal orders disagree for " + s.to_string() + " on (" + bp.to_string() + "): " +
                          std::to_string(first) + " vs " + std::to_string(v));
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return finish(s, bp, family, first);
}

}  // namespace unipmn
