#include "sta/deaconu_renault.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sta/errors.hpp"

namespace sta {

Sft::Sft(std::vector<std::string> alphabet, std::vector<std::vector<bool>> allow)
    : alphabet_(std::move(alphabet)), allow_(std::move(allow)) {
  std::set<std::string> seen;
  for (const auto& a : alphabet_)
    if (!seen.insert(a).second) throw DuplicateId(a);
  for (int a = 0; a < letter_count(); ++a) {
    bool any = false;
    for (int b = 0; b < letter_count(); ++b) any = any || allow_[a][b];
    if (!any) throw DomainError("letter '" + alphabet_[a] + "' has no admissible successor");
  }
}

Sft Sft::parse(const std::string& text) {
  std::vector<std::string> alphabet;
  std::vector<std::pair<std::string, std::string>> allows;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (kind == "alphabet") {
      std::string name;
      while (ls >> name) alphabet.push_back(name);
    } else if (kind == "allow") {
      std::string x, y;
      if (!(ls >> x >> y))
        throw ParseError("line " + std::to_string(lineno) + ": expected `allow <x> <y>`");
      allows.emplace_back(x, y);
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown item '" + kind + "'");
    }
  }
  int n = static_cast<int>(alphabet.size());
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  auto index = [&](const std::string& s) {
    auto it = std::find(alphabet.begin(), alphabet.end(), s);
    if (it == alphabet.end()) throw UnknownSymbol(s);
    return static_cast<int>(it - alphabet.begin());
  };
  for (const auto& [x, y] : allows) m[index(x)][index(y)] = true;
  return Sft(std::move(alphabet), std::move(m));
}

std::string Sft::print() const {
  std::string out = "alphabet";
  for (const auto& a : alphabet_) out += " " + a;
  out += "\n";
  for (int a = 0; a < letter_count(); ++a)
    for (int b = 0; b < letter_count(); ++b)
      if (allow_[a][b]) out += "allow " + alphabet_[a] + " " + alphabet_[b] + "\n";
  return out;
}

int Sft::letter_index(const std::string& name) const {
  auto it = std::find(alphabet_.begin(), alphabet_.end(), name);
  if (it == alphabet_.end()) throw UnknownSymbol(name);
  return static_cast<int>(it - alphabet_.begin());
}

WordSet::WordSet(const Sft* sft, std::vector<Word> words) : sft_(sft) {
  size_t max_len = 0;
  for (const auto& w : words) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (!sft->allowed(w[i], w[i + 1]))
        throw DomainError("inadmissible word in cylinder set");
    max_len = std::max(max_len, w.size());
  }
  words_ = std::move(words);
  *this = refined(static_cast<int>(max_len));
}

WordSet WordSet::refined(int length) const {
  std::vector<Word> out;
  for (const auto& w : words_) {
    std::vector<Word> frontier{w};
    while (!frontier.empty() && static_cast<int>(frontier[0].size()) < length) {
      std::vector<Word> next;
      for (const auto& p : frontier)
        for (int b = 0; b < sft_->letter_count(); ++b)
          if (p.empty() || sft_->allowed(p.back(), b)) {
            next.push_back(p);
            next.back().push_back(b);
          }
      frontier = std::move(next);
    }
    out.insert(out.end(), frontier.begin(), frontier.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  WordSet r;
  r.sft_ = sft_;
  r.words_ = std::move(out);
  return r;
}

WordSet WordSet::intersect(const WordSet& other) const {
  int len = std::max(word_length(), other.word_length());
  WordSet a = refined(len), b = other.refined(len);
  WordSet r;
  r.sft_ = sft_;
  std::set_intersection(a.words_.begin(), a.words_.end(), b.words_.begin(), b.words_.end(),
                        std::back_inserter(r.words_));
  return r;
}

bool operator==(const WordSet& a, const WordSet& b) {
  int len = std::max(a.word_length(), b.word_length());
  return a.refined(len).words() == b.refined(len).words();
}

std::string WordSet::str() const {
  if (words_.empty()) return "[]";
  std::string out;
  for (const auto& w : words_) {
    if (!out.empty()) out += "u";
    out += "[";
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) out += ".";
      out += sft_->letter(w[i]);
    }
    out += "]";
  }
  return out;
}

std::string DrBasic::str() const {
  return "Z(" + u.str() + "," + v.str() + "," + std::to_string(k) + "," + std::to_string(l) + ")";
}

namespace {

Word suffix_from(const Word& w, int k) { return Word(w.begin() + k, w.end()); }

// Refined presentation on which T^k is injective: each word strictly longer
// than k, suffixes pairwise distinct.
WordSet injective_form(const WordSet& u, int k) {
  WordSet r = u.refined(std::max(u.word_length(), k + 1));
  std::set<Word> suffixes;
  for (const auto& w : r.words())
    if (!suffixes.insert(suffix_from(w, k)).second)
      throw NotInjective("shift power " + std::to_string(k) + " not injective on " + u.str());
  return r;
}

}  // namespace

WordSet dr_image(const WordSet& u, int k) {
  WordSet r = injective_form(u, k);
  std::vector<Word> img;
  for (const auto& w : r.words()) img.push_back(suffix_from(w, k));
  return WordSet(u.sft(), std::move(img));
}

DrBasic dr_validate(const WordSet& u, const WordSet& v, int k, int l) {
  if (u.empty() || v.empty()) throw DomainError("empty cylinder union");
  if (!(dr_image(u, k) == dr_image(v, l)))
    throw ImageMismatch("T^" + std::to_string(k) + "(" + u.str() + ") != T^" + std::to_string(l) +
                        "(" + v.str() + ")");
  return DrBasic{u, v, k, l};
}

std::vector<DrBasic> dr_mul(const DrBasic& a, const DrBasic& b) {
  const Sft* sft = a.u.sft();
  int mid_len = std::max({a.v.word_length(), b.u.word_length(), a.l + b.k + 1});
  WordSet mid = a.v.refined(mid_len).intersect(b.u.refined(mid_len));

  WordSet u1 = injective_form(a.u.refined(a.k + (mid_len - a.l)), a.k);
  WordSet v2 = injective_form(b.v.refined(b.l + (mid_len - b.k)), b.l);

  std::vector<DrBasic> out;
  for (const auto& m : mid.words()) {
    Word after_l = suffix_from(m, a.l);
    Word after_k = suffix_from(m, b.k);
    // By injectivity at most one member on either side matches the middle
    // tail; by the image identity exactly one does.
    for (const auto& uw : u1.words()) {
      if (suffix_from(uw, a.k) != after_l) continue;
      for (const auto& vw : v2.words()) {
        if (suffix_from(vw, b.l) != after_k) continue;
        out.push_back(DrBasic{WordSet(sft, {uw}), WordSet(sft, {vw}), a.k + b.k, a.l + b.l});
      }
    }
  }
  return out;
}

CylSet dr_to_graph(const DrBasic& d, const Graph& g) {
  const Sft* sft = d.u.sft();
  if (sft->letter_count() != g.edge_count()) throw NotEdgeShift("alphabet does not match the edge set");
  std::vector<int> edge_of(sft->letter_count());
  for (int a = 0; a < sft->letter_count(); ++a) {
    int e = g.edge_index(sft->letter(a));
    if (e < 0) throw NotEdgeShift("alphabet does not match the edge set");
    edge_of[a] = e;
  }
  for (int a = 0; a < sft->letter_count(); ++a)
    for (int b = 0; b < sft->letter_count(); ++b)
      if (sft->allowed(a, b) != (g.edge(edge_of[a]).source == g.edge(edge_of[b]).range))
        throw NotEdgeShift("alphabet does not match the edge set");

  auto path_of = [&](const Word& w) {
    Path p(&g, g.edge(edge_of[w[0]]).range);
    for (int a : w) p = p.append(edge_of[a]);
    return p;
  };

  int t = std::max({d.u.word_length() - d.k, d.v.word_length() - d.l, 1});
  WordSet u = injective_form(d.u.refined(d.k + t), d.k);
  WordSet v = injective_form(d.v.refined(d.l + t), d.l);
  std::vector<BasicBisection> parts;
  for (const auto& uw : u.words())
    for (const auto& vw : v.words())
      if (suffix_from(uw, d.k) == suffix_from(vw, d.l))
        parts.emplace_back(path_of(uw), path_of(vw));
  return CylSet(std::move(parts));
}

}  // namespace sta
