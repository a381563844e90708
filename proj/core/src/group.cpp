#include "macaevlab/group.hpp"

#include <algorithm>
#include <sstream>

namespace macaev {

std::string family_name(GroupFamily f) {
  switch (f) {
    case GroupFamily::free_group:
      return "free";
    case GroupFamily::free_abelian:
      return "zd";
    case GroupFamily::lamplighter:
      return "lamplighter";
    case GroupFamily::heisenberg:
      return "heisenberg";
    case GroupFamily::free_monoid:
      return "monoid";
  }
  return "?";
}

GroupSpec GroupSpec::free_group(int n) {
  if (n < 1 || n > 26) throw InputError("free: rank must be in 1..26");
  GroupSpec g(GroupFamily::free_group, n);
  g.use_default_generators();
  return g;
}

GroupSpec GroupSpec::free_abelian(int d) {
  if (d < 1 || d > 26) throw InputError("zd: dimension must be in 1..26");
  GroupSpec g(GroupFamily::free_abelian, d);
  g.use_default_generators();
  return g;
}

GroupSpec GroupSpec::lamplighter() {
  GroupSpec g(GroupFamily::lamplighter, 0);
  g.use_default_generators();
  return g;
}

GroupSpec GroupSpec::heisenberg() {
  GroupSpec g(GroupFamily::heisenberg, 0);
  g.use_default_generators();
  return g;
}

GroupSpec GroupSpec::free_monoid(int n) {
  if (n < 1 || n > 26) throw InputError("monoid: rank must be in 1..26");
  GroupSpec g(GroupFamily::free_monoid, n);
  g.use_default_generators();
  return g;
}

void GroupSpec::use_default_generators() {
  generators_.clear();
  switch (family_) {
    case GroupFamily::free_group:
    case GroupFamily::free_monoid: {
      for (int i = 1; i <= rank_; ++i) {
        generators_.push_back({family_, {i}});
      }
      if (family_ == GroupFamily::free_group) {
        for (int i = 1; i <= rank_; ++i) generators_.push_back({family_, {-i}});
      }
      symmetric_ = family_ == GroupFamily::free_group;
      break;
    }
    case GroupFamily::free_abelian: {
      for (int i = 0; i < rank_; ++i) {
        Element e{family_, std::vector<std::int64_t>(rank_, 0)};
        e.data[i] = 1;
        generators_.push_back(e);
      }
      for (int i = 0; i < rank_; ++i) {
        Element e{family_, std::vector<std::int64_t>(rank_, 0)};
        e.data[i] = -1;
        generators_.push_back(e);
      }
      symmetric_ = true;
      break;
    }
    case GroupFamily::lamplighter: {
      generators_.push_back({family_, {1}});     // t: move head right
      generators_.push_back({family_, {0, 0}});  // s: toggle lamp at head
      generators_.push_back({family_, {-1}});    // t^-1
      symmetric_ = true;
      break;
    }
    case GroupFamily::heisenberg: {
      generators_.push_back({family_, {1, 0, 0}});
      generators_.push_back({family_, {0, 1, 0}});
      generators_.push_back({family_, {-1, 0, 0}});
      generators_.push_back({family_, {0, -1, 0}});
      symmetric_ = true;
      break;
    }
  }
}

GroupSpec GroupSpec::with_generators(std::vector<Element> gens) const {
  if (gens.empty()) throw InputError("generating set must be nonempty");
  GroupSpec g = *this;
  for (const auto& e : gens) g.check_element(e);
  if (family_ != GroupFamily::free_monoid) {
    // Close under inverses, preserving first-seen order.
    std::vector<Element> closed;
    for (const auto& e : gens) {
      if (std::find(closed.begin(), closed.end(), e) == closed.end()) closed.push_back(e);
    }
    for (const auto& e : gens) {
      Element inv = inverse(e);
      if (std::find(closed.begin(), closed.end(), inv) == closed.end()) closed.push_back(inv);
    }
    g.generators_ = std::move(closed);
    g.symmetric_ = true;
  } else {
    g.generators_ = std::move(gens);
    g.symmetric_ = false;
  }
  g.custom_gens_ = true;
  return g;
}

GroupSpec GroupSpec::parse(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ';')) parts.push_back(tok);
  if (parts.empty()) throw InputError("group spec: empty");

  const std::string& head = parts[0];
  GroupSpec g = [&head]() {
    auto colon = head.find(':');
    std::string fam = head.substr(0, colon);
    int param = 0;
    if (colon != std::string::npos) {
      try {
        param = std::stoi(head.substr(colon + 1));
      } catch (const std::logic_error&) {
        throw InputError("group spec: bad rank in '" + head + "'");
      }
    }
    if (fam == "free") return GroupSpec::free_group(param);
    if (fam == "zd") return GroupSpec::free_abelian(param);
    if (fam == "lamplighter") return GroupSpec::lamplighter();
    if (fam == "heisenberg") return GroupSpec::heisenberg();
    if (fam == "monoid") return GroupSpec::free_monoid(param);
    throw InputError("group spec: unknown family '" + fam + "'");
  }();

  for (std::size_t i = 1; i < parts.size(); ++i) {
    const std::string& p = parts[i];
    if (p.rfind("gens=", 0) == 0) {
      std::vector<Element> gens;
      std::stringstream gs(p.substr(5));
      std::string w;
      while (std::getline(gs, w, ',')) {
        if (!w.empty()) gens.push_back(g.parse_element(w));
      }
      g = g.with_generators(std::move(gens));
    } else if (!p.empty()) {
      throw InputError("group spec: unknown option '" + p + "'");
    }
  }
  return g;
}

std::string GroupSpec::to_string() const {
  std::string s = family_name(family_);
  if (rank_ > 0) s += ":" + std::to_string(rank_);
  if (custom_gens_) {
    s += ";gens=";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (i) s += ",";
      s += element_str(generators_[i]);
    }
  }
  return s;
}

Element GroupSpec::identity() const {
  switch (family_) {
    case GroupFamily::free_group:
    case GroupFamily::free_monoid:
      return {family_, {}};
    case GroupFamily::free_abelian:
      return {family_, std::vector<std::int64_t>(rank_, 0)};
    case GroupFamily::lamplighter:
      return {family_, {0}};
    case GroupFamily::heisenberg:
      return {family_, {0, 0, 0}};
  }
  throw InputError("identity: unknown family");
}

void GroupSpec::check_element(const Element& e) const {
  if (e.family != family_) throw InputError("element family mismatch");
  switch (family_) {
    case GroupFamily::free_group:
    case GroupFamily::free_monoid:
      for (auto l : e.data) {
        bool ok = l != 0 && std::abs(l) <= rank_ && (family_ == GroupFamily::free_group || l > 0);
        if (!ok) throw InputError("bad letter in word element");
      }
      break;
    case GroupFamily::free_abelian:
      if (e.data.size() != static_cast<std::size_t>(rank_)) throw InputError("bad zd coordinate count");
      break;
    case GroupFamily::lamplighter:
      if (e.data.empty()) throw InputError("bad lamplighter element");
      break;
    case GroupFamily::heisenberg:
      if (e.data.size() != 3) throw InputError("bad heisenberg element");
      break;
  }
}

Element GroupSpec::multiply(const Element& a, const Element& b) const {
  check_element(a);
  check_element(b);
  switch (family_) {
    case GroupFamily::free_group: {
      Element out = a;
      for (auto l : b.data) {
        if (!out.data.empty() && out.data.back() == -l) {
          out.data.pop_back();
        } else {
          out.data.push_back(l);
        }
      }
      return out;
    }
    case GroupFamily::free_monoid: {
      Element out = a;
      out.data.insert(out.data.end(), b.data.begin(), b.data.end());
      return out;
    }
    case GroupFamily::free_abelian: {
      Element out = a;
      for (int i = 0; i < rank_; ++i) out.data[i] += b.data[i];
      return out;
    }
    case GroupFamily::lamplighter: {
      // (A, p)(B, q) = (A xor (B + p), p + q)
      std::int64_t p = a.data[0], q = b.data[0];
      std::vector<std::int64_t> shifted(b.data.begin() + 1, b.data.end());
      for (auto& l : shifted) l += p;
      std::vector<std::int64_t> lamps;
      std::set_symmetric_difference(a.data.begin() + 1, a.data.end(), shifted.begin(),
                                    shifted.end(), std::back_inserter(lamps));
      Element out{family_, {p + q}};
      out.data.insert(out.data.end(), lamps.begin(), lamps.end());
      return out;
    }
    case GroupFamily::heisenberg: {
      // (x1,y1,z1)(x2,y2,z2) = (x1+x2, y1+y2, z1+z2+x1*y2)
      return {family_,
              {a.data[0] + b.data[0], a.data[1] + b.data[1],
               a.data[2] + b.data[2] + a.data[0] * b.data[1]}};
    }
  }
  throw InputError("multiply: unknown family");
}

Element GroupSpec::inverse(const Element& a) const {
  check_element(a);
  switch (family_) {
    case GroupFamily::free_group: {
      Element out{family_, {}};
      out.data.reserve(a.data.size());
      for (auto it = a.data.rbegin(); it != a.data.rend(); ++it) out.data.push_back(-*it);
      return out;
    }
    case GroupFamily::free_monoid:
      throw InputError("free monoid has no inverses");
    case GroupFamily::free_abelian: {
      Element out = a;
      for (auto& c : out.data) c = -c;
      return out;
    }
    case GroupFamily::lamplighter: {
      std::int64_t p = a.data[0];
      Element out{family_, {-p}};
      for (std::size_t i = 1; i < a.data.size(); ++i) out.data.push_back(a.data[i] - p);
      std::sort(out.data.begin() + 1, out.data.end());
      return out;
    }
    case GroupFamily::heisenberg:
      return {family_, {-a.data[0], -a.data[1], a.data[0] * a.data[1] - a.data[2]}};
  }
  throw InputError("inverse: unknown family");
}

Element GroupSpec::from_letters(const std::string& word) const {
  Element out = identity();
  if (word == "e" || word.empty()) return out;
  for (char c : word) {
    Element step = identity();
    switch (family_) {
      case GroupFamily::free_group:
      case GroupFamily::free_monoid:
      case GroupFamily::free_abelian: {
        int idx = 0, sign = 0;
        if (c >= 'a' && c <= 'z') {
          idx = c - 'a' + 1;
          sign = 1;
        } else if (c >= 'A' && c <= 'Z') {
          idx = c - 'A' + 1;
          sign = -1;
        }
        if (idx < 1 || idx > rank_ || (sign < 0 && family_ == GroupFamily::free_monoid)) {
          throw InputError(std::string("unknown generator symbol '") + c + "'");
        }
        if (family_ == GroupFamily::free_abelian) {
          step.data[idx - 1] = sign;
        } else {
          step.data = {sign * idx};
        }
        break;
      }
      case GroupFamily::lamplighter: {
        if (c == 't') step.data = {1};
        else if (c == 'T') step.data = {-1};
        else if (c == 's') step.data = {0, 0};
        else throw InputError(std::string("unknown generator symbol '") + c + "'");
        break;
      }
      case GroupFamily::heisenberg: {
        if (c == 'x') step.data = {1, 0, 0};
        else if (c == 'X') step.data = {-1, 0, 0};
        else if (c == 'y') step.data = {0, 1, 0};
        else if (c == 'Y') step.data = {0, -1, 0};
        else if (c == 'z') step.data = {0, 0, 1};
        else if (c == 'Z') step.data = {0, 0, -1};
        else throw InputError(std::string("unknown generator symbol '") + c + "'");
        break;
      }
    }
    out = multiply(out, step);
  }
  return out;
}

namespace {
std::vector<std::int64_t> parse_ints(const std::string& s, char sep) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) {
    if (tok.empty()) continue;
    try {
      out.push_back(std::stoll(tok));
    } catch (const std::logic_error&) {
      throw InputError("bad integer '" + tok + "' in element");
    }
  }
  return out;
}
}  // namespace

Element GroupSpec::parse_element(const std::string& text) const {
  std::string s = text;
  bool tuple = false;
  if (!s.empty() && s.front() == '(' && s.back() == ')') {
    s = s.substr(1, s.size() - 2);
    tuple = true;
  }
  if (!tuple && s.find(':') == std::string::npos) return from_letters(s);

  switch (family_) {
    case GroupFamily::free_abelian: {
      char sep = s.find(':') != std::string::npos ? ':' : ',';
      auto coords = parse_ints(s, sep);
      if (coords.size() != static_cast<std::size_t>(rank_)) {
        throw InputError("zd element needs " + std::to_string(rank_) + " coordinates");
      }
      Element e{family_, std::move(coords)};
      return e;
    }
    case GroupFamily::heisenberg: {
      char sep = s.find(':') != std::string::npos ? ':' : ',';
      auto coords = parse_ints(s, sep);
      if (coords.size() != 3) throw InputError("heisenberg element needs 3 coordinates");
      return {family_, std::move(coords)};
    }
    case GroupFamily::lamplighter: {
      auto semi = s.find(';');
      if (semi == std::string::npos) throw InputError("lamplighter element: expected '(pos;lamps)'");
      std::int64_t pos = 0;
      try {
        pos = std::stoll(s.substr(0, semi));
      } catch (const std::logic_error&) {
        throw InputError("lamplighter element: bad position");
      }
      auto lamps = parse_ints(s.substr(semi + 1), ',');
      std::sort(lamps.begin(), lamps.end());
      lamps.erase(std::unique(lamps.begin(), lamps.end()), lamps.end());
      Element e{family_, {pos}};
      e.data.insert(e.data.end(), lamps.begin(), lamps.end());
      return e;
    }
    default:
      throw InputError("tuple element form not supported for " + family_name(family_));
  }
}

std::string GroupSpec::element_str(const Element& e) const {
  check_element(e);
  switch (family_) {
    case GroupFamily::free_group:
    case GroupFamily::free_monoid: {
      if (e.data.empty()) return "e";
      std::string s;
      for (auto l : e.data) {
        s += static_cast<char>(l > 0 ? 'a' + l - 1 : 'A' - l - 1);
      }
      return s;
    }
    case GroupFamily::free_abelian:
    case GroupFamily::heisenberg: {
      std::string s = "(";
      for (std::size_t i = 0; i < e.data.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e.data[i]);
      }
      return s + ")";
    }
    case GroupFamily::lamplighter: {
      std::string s = "(" + std::to_string(e.data[0]) + ";";
      for (std::size_t i = 1; i < e.data.size(); ++i) {
        if (i > 1) s += ",";
        s += std::to_string(e.data[i]);
      }
      return s + ")";
    }
  }
  throw InputError("element_str: unknown family");
}

}  // namespace macaev
