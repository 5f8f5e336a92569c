#include <algorithm>
#include <cstring>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "chartab.hpp"

namespace lch {

namespace {

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(uint64_t v) {
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

std::string CharTable::serialize(const std::string& group_label) const {
  std::ostringstream os;
  os << "weylchartable 1\n";
  os << "group " << group_label << "\n";
  os << "order " << order_ << "\n";
  os << "classes " << num_classes() << "\n";
  for (int i = 0; i < num_classes(); ++i) {
    os << "class " << i << " size " << classes_[i].size << " word "
       << WeylGroup::word_str(classes_[i].rep_word) << " fp " << fps_[i].str() << "\n";
  }
  for (int i = 0; i < num_chars(); ++i) {
    os << "irr " << i << " name " << rows_[i].name << " aliases ";
    if (rows_[i].aliases.empty())
      os << "-";
    else
      for (size_t a = 0; a < rows_[i].aliases.size(); ++a)
        os << (a ? "," : "") << rows_[i].aliases[a];
    os << " values ";
    for (int j = 0; j < num_classes(); ++j) os << (j ? "," : "") << rows_[i].values[j];
    os << "\n";
  }
  std::string body = os.str();
  return body + "checksum fnv1a " + hex64(fnv1a(body)) + "\n";
}

CharTable load_chartable_impl(const std::string& text, const WeylGroup& w) {
  // verify the checksum line first
  size_t ck = text.rfind("checksum fnv1a ");
  if (ck == std::string::npos) throw std::runtime_error("chartable: missing checksum");
  std::string body = text.substr(0, ck);
  std::string given = text.substr(ck + strlen("checksum fnv1a "));
  while (!given.empty() && (given.back() == '\n' || given.back() == '\r'))
    given.pop_back();
  if (hex64(fnv1a(body)) != given)
    throw std::runtime_error("chartable: checksum mismatch");

  CharTable t;
  t.w_ = &w;
  std::istringstream is(body);
  std::string line;
  int line_no = 0;
  int nclasses = -1;
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error("chartable line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok == "weylchartable") {
      int v;
      ls >> v;
      if (v != 1) fail("unsupported version");
    } else if (tok == "group") {
      std::string g;
      ls >> g;
      if (g != w.root_system().label()) fail("group label mismatch");
    } else if (tok == "order") {
      ls >> t.order_;
      if (mpz_class(static_cast<unsigned long>(t.order_)) != w.order_from_type())
        fail("order mismatch");
    } else if (tok == "classes") {
      ls >> nclasses;
    } else if (tok == "class") {
      int idx;
      std::string kw, word, fpkw, fpstr;
      uint64_t size;
      ls >> idx >> kw >> size >> kw >> word >> fpkw >> fpstr;
      if (idx != static_cast<int>(t.classes_.size())) fail("class index out of order");
      TwistedClass c;
      c.size = size;
      c.rep = word == "e" ? w.identity() : w.parse_word(word);
      c.rep_word = w.reduced_word(c.rep);
      t.classes_.push_back(c);
      ClassFingerprint fp = ClassFingerprint::parse(fpstr);
      if (!(fp == ClassFingerprint::of(w, c.rep)))
        fail("fingerprint does not match the representative");
      t.fps_.push_back(std::move(fp));
    } else if (tok == "irr") {
      int idx;
      std::string kw, name, aliases, values;
      ls >> idx >> kw >> name >> kw >> aliases >> kw >> values;
      CharRow row;
      row.name = name;
      if (aliases != "-") {
        std::stringstream as(aliases);
        std::string a;
        while (std::getline(as, a, ',')) row.aliases.push_back(a);
      }
      std::stringstream vs(values);
      std::string v;
      while (std::getline(vs, v, ',')) row.values.push_back(std::stoll(v));
      if (nclasses > 0 && static_cast<int>(row.values.size()) != nclasses)
        fail("wrong number of values");
      row.degree = row.values.empty() ? 0 : row.values[0];
      t.rows_.push_back(std::move(row));
    } else {
      fail("unknown record '" + tok + "'");
    }
  }
  if (nclasses != static_cast<int>(t.classes_.size())) fail("class count mismatch");
  if (static_cast<int>(t.rows_.size()) != nclasses) fail("row count mismatch");
  uint64_t total = 0;
  for (const auto& c : t.classes_) total += c.size;
  if (total != t.order_) throw std::runtime_error("chartable: class sizes do not sum");
  t.verify_orthogonality();
  // recover b-invariants for labeling checks
  t.compute_b_invariants();
  return t;
}

CharTable CharTable::load(const std::string& text, const WeylGroup& w) {
  return load_chartable_impl(text, w);
}

// ---------------------------------------------------------------------------
// big-group classification: orbit BFS over a 64-bit hash map; exactness is
// certified by the total-count check at the end.

namespace {

constexpr uint16_t kUnclass = 0xFF;
constexpr uint16_t kVisited1 = 1u << 8;
constexpr uint16_t kVisited2 = 1u << 9;

struct HashClassMap {
  std::vector<uint64_t> keys;
  std::vector<uint16_t> vals;
  uint64_t mask = 0;
  uint64_t count = 0;

  explicit HashClassMap(uint64_t expected) {
    uint64_t cap = 1;
    while (cap < 2 * expected) cap <<= 1;
    keys.assign(cap, 0);
    vals.assign(cap, 0);
    mask = cap - 1;
  }
  static uint64_t mix(uint64_t h) { return h ? h : 0x9e3779b97f4a7c15ull; }
  // returns slot index; inserts if absent with value v0
  uint64_t find_or_insert(uint64_t h, uint16_t v0, bool& inserted) {
    h = mix(h);
    uint64_t i = h & mask;
    for (;;) {
      if (keys[i] == 0) {
        keys[i] = h;
        vals[i] = v0;
        ++count;
        inserted = true;
        return i;
      }
      if (keys[i] == h) {
        inserted = false;
        return i;
      }
      i = (i + 1) & mask;
    }
  }
  // slot of an existing key (throws if absent)
  uint64_t find(uint64_t h) const {
    h = mix(h);
    uint64_t i = h & mask;
    for (;;) {
      if (keys[i] == h) return i;
      if (keys[i] == 0) throw std::logic_error("hash map: missing element");
      i = (i + 1) & mask;
    }
  }
};

struct BigGroupData {
  BigGroupClasses classes;
  HashClassMap map;
  std::vector<WeylElt> reps;  // same as classes.reps

  explicit BigGroupData(uint64_t expected) : map(expected) {}
};

BigGroupData classify_big(const WeylGroup& w) {
  mpz_class expected_z = w.order_from_type();
  if (!expected_z.fits_ulong_p()) throw std::runtime_error("group too large");
  uint64_t expected = expected_z.get_ui();
  BigGroupData data(expected);
  HashClassMap& map = data.map;

  int rank = w.rank();
  std::vector<WeylElt> gens;
  for (int i = 0; i < rank; ++i) gens.push_back(w.simple_reflection(i));

  struct ClassAcc {
    uint64_t size = 0;
    WeylElt best;
    int best_len = 1 << 30;
    std::vector<int> best_word;
  };
  std::vector<ClassAcc> acc;

  auto classify_orbit = [&](const WeylElt& seed, uint64_t seed_slot) {
    int id = static_cast<int>(acc.size());
    if (id >= 0xFF) throw std::runtime_error("too many classes for the class map");
    acc.emplace_back();
    ClassAcc& ca = acc.back();
    std::vector<WeylElt> frontier{seed};
    map.vals[seed_slot] = static_cast<uint16_t>((map.vals[seed_slot] & ~0xFFu) | id);
    auto update_best = [&](const WeylElt& e) {
      int len = w.length(e);
      if (len > ca.best_len) return;
      std::vector<int> word = w.reduced_word(e);
      if (len < ca.best_len || word < ca.best_word) {
        ca.best_len = len;
        ca.best = e;
        ca.best_word = std::move(word);
      }
    };
    update_best(seed);
    ++ca.size;
    while (!frontier.empty()) {
      std::vector<WeylElt> next;
      for (const auto& z : frontier)
        for (const auto& s : gens) {
          WeylElt u = w.mul(w.mul(s, z), s);  // generators are involutions
          bool inserted = false;
          uint64_t slot = map.find_or_insert(u.hash(), static_cast<uint16_t>(id), inserted);
          if (inserted) {
            ++ca.size;
            update_best(u);
            next.push_back(std::move(u));
          } else if ((map.vals[slot] & 0xFF) == kUnclass) {
            map.vals[slot] =
                static_cast<uint16_t>((map.vals[slot] & ~0xFFu) | id);
            ++ca.size;
            update_best(u);
            next.push_back(std::move(u));
          } else if ((map.vals[slot] & 0xFF) != id) {
            throw std::logic_error("conflicting class assignment (hash collision?)");
          }
        }
      frontier = std::move(next);
    }
  };

  // breadth-first over the group by word length, classifying new classes as
  // they appear
  WeylElt e = w.identity();
  bool ins;
  uint64_t slot0 = map.find_or_insert(e.hash(), kVisited1 | kUnclass, ins);
  classify_orbit(e, slot0);
  std::vector<WeylElt> frontier{e};
  while (!frontier.empty()) {
    std::vector<WeylElt> next;
    for (const auto& x : frontier)
      for (const auto& s : gens) {
        WeylElt y = w.mul(x, s);
        bool inserted = false;
        uint64_t slot =
            map.find_or_insert(y.hash(), kVisited1 | kUnclass, inserted);
        if (!inserted) {
          if (map.vals[slot] & kVisited1) continue;
          map.vals[slot] |= kVisited1;
        }
        if ((map.vals[slot] & 0xFF) == kUnclass) classify_orbit(y, slot);
        next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }

  if (map.count != expected)
    throw std::runtime_error("big-group enumeration count mismatch (rerun advised)");
  uint64_t total = 0;
  for (const auto& ca : acc) total += ca.size;
  if (total != expected) throw std::logic_error("class sizes do not sum to the order");

  // sort classes canonically and remap ids
  std::vector<int> perm(acc.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (acc[a].best_word.size() != acc[b].best_word.size())
      return acc[a].best_word.size() < acc[b].best_word.size();
    return acc[a].best_word < acc[b].best_word;
  });
  std::vector<int> inv(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  for (uint64_t i = 0; i <= map.mask; ++i)
    if (map.keys[i] != 0)
      map.vals[i] = static_cast<uint16_t>((map.vals[i] & ~0xFFu) |
                                          inv[map.vals[i] & 0xFF]);
  for (int i : perm) {
    data.classes.reps.push_back(acc[i].best);
    data.classes.sizes.push_back(acc[i].size);
    data.classes.fingerprints.push_back(ClassFingerprint::of(w, acc[i].best));
  }
  data.classes.total = total;
  data.reps = data.classes.reps;
  return data;
}

}  // namespace

BigGroupClasses enumerate_big_group_classes(const WeylGroup& w) {
  return classify_big(w).classes;
}

CharTable compute_big_group_table(const WeylGroup& w) {
  BigGroupData data = classify_big(w);
  HashClassMap& map = data.map;
  const auto& reps = data.reps;
  int k = static_cast<int>(reps.size());

  // second traversal for the class matrices
  std::vector<std::vector<std::vector<uint64_t>>> cmats(
      k, std::vector<std::vector<uint64_t>>(k, std::vector<uint64_t>(k, 0)));
  std::vector<WeylElt> gens;
  for (int i = 0; i < w.rank(); ++i) gens.push_back(w.simple_reflection(i));
  {
    WeylElt e = w.identity();
    uint64_t slot = map.find(e.hash());
    map.vals[slot] |= kVisited2;
    std::vector<WeylElt> frontier{e};
    while (!frontier.empty()) {
      std::vector<WeylElt> next;
      for (const auto& x : frontier) {
        int i = map.vals[map.find(x.hash())] & 0xFF;
        WeylElt xi = w.inverse(x);
        for (int l = 0; l < k; ++l) {
          int j = map.vals[map.find(w.mul(xi, reps[l]).hash())] & 0xFF;
          cmats[i][j][l] += 1;
        }
        for (const auto& s : gens) {
          WeylElt y = w.mul(x, s);
          uint64_t slot2 = map.find(y.hash());
          if (map.vals[slot2] & kVisited2) continue;
          map.vals[slot2] |= kVisited2;
          next.push_back(std::move(y));
        }
      }
      frontier = std::move(next);
    }
  }

  std::vector<int> inv_class(k);
  for (int i = 0; i < k; ++i)
    inv_class[i] = map.vals[map.find(w.inverse(reps[i]).hash())] & 0xFF;

  long expo = 1;
  for (const auto& r : reps) {
    std::vector<bool> seen(r.p.size(), false);
    long ord = 1;
    for (size_t i = 0; i < r.p.size(); ++i) {
      if (seen[i]) continue;
      long len = 0;
      for (size_t j = i; !seen[j]; j = r.p[j]) {
        seen[j] = true;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    expo = std::lcm(expo, ord);
  }
  uint64_t order = data.classes.total;
  uint64_t max_degree = 1;
  while ((max_degree + 1) * (max_degree + 1) <= order) ++max_degree;
  auto is_prime = [](uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  uint64_t p = static_cast<uint64_t>(expo) + 1;
  while (!(is_prime(p) && p > 2 * max_degree && order % p != 0))
    p += static_cast<uint64_t>(expo);

  // assemble the table through the same eigen machinery as the small case
  CharTable t;
  t.w_ = &w;
  t.order_ = order;
  for (int i = 0; i < k; ++i) {
    TwistedClass c;
    c.rep = reps[i];
    c.rep_word = w.reduced_word(reps[i]);
    c.size = data.classes.sizes[i];
    t.classes_.push_back(std::move(c));
  }
  t.fps_ = data.classes.fingerprints;
  std::vector<std::vector<long long>> rows =
      detail_dixon_rows(cmats, data.classes.sizes, inv_class, order, max_degree, p);
  for (auto& r : rows) {
    CharRow cr;
    cr.degree = r[0];
    cr.values = std::move(r);
    t.rows_.push_back(std::move(cr));
  }
  t.compute_b_invariants();
  t.sort_rows();
  apply_db_labels(t);
  t.verify_orthogonality();
  return t;
}

}  // namespace lch
