#include "epistrict/relation.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "epistrict/errors.hpp"
#include "text_io.hpp"

namespace epistrict {

namespace {

std::shared_ptr<const std::vector<std::string>> numbered(std::size_t n) {
  auto v = std::make_shared<std::vector<std::string>>();
  for (std::size_t i = 0; i < n; ++i) v->push_back(std::to_string(i));
  return v;
}

void check_pair(const Relation& r, std::size_t x, std::size_t y) {
  if (x >= r.dom().size() || y >= r.cod().size()) {
    throw std::out_of_range("pair (" + std::to_string(x) + "," + std::to_string(y) + ") outside relation shape");
  }
}

}  // namespace

FinSet::FinSet(std::size_t size) : size_(size) {
  if (size == 0) throw std::invalid_argument("empty sets are not supported");
  if (size > 1) {
    sizes_ = {size};
    labels_ = {numbered(size)};
  }
}

FinSet::FinSet(std::vector<std::string> labels) : size_(labels.size()) {
  if (labels.empty()) throw std::invalid_argument("empty sets are not supported");
  auto sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw std::invalid_argument("duplicate labels");
  if (size_ > 1) {
    sizes_ = {size_};
    labels_ = {std::make_shared<const std::vector<std::string>>(std::move(labels))};
  }
}

std::string FinSet::label(std::size_t i) const {
  if (i >= size_) throw std::out_of_range("element index out of range");
  if (sizes_.empty()) return "*";
  if (sizes_.size() == 1) return (*labels_[0])[i];
  std::vector<std::string> parts(sizes_.size());
  for (std::size_t k = sizes_.size(); k-- > 0;) {
    parts[k] = (*labels_[k])[i % sizes_[k]];
    i /= sizes_[k];
  }
  std::string out = "(";
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? "," : "") + parts[k];
  return out + ")";
}

FinSet FinSet::operator*(const FinSet& o) const {
  FinSet out = *this;
  out.size_ *= o.size_;
  out.sizes_.insert(out.sizes_.end(), o.sizes_.begin(), o.sizes_.end());
  out.labels_.insert(out.labels_.end(), o.labels_.begin(), o.labels_.end());
  return out;
}

Relation::Relation(FinSet dom, FinSet cod) : dom_(std::move(dom)), cod_(std::move(cod)), rows_(dom_.size()) {
  if (cod_.size() > UINT32_MAX) throw std::length_error("codomain too large");
}

Relation Relation::from_pairs(FinSet dom, FinSet cod, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Relation r(std::move(dom), std::move(cod));
  for (auto [x, y] : pairs) {
    check_pair(r, x, y);
    r.rows_[x].push_back(static_cast<Index>(y));
  }
  for (auto& row : r.rows_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return r;
}

Relation Relation::from_map(FinSet dom, FinSet cod, const std::vector<std::size_t>& images) {
  if (images.size() != dom.size()) throw DimensionMismatch("map has the wrong number of images");
  Relation r(std::move(dom), std::move(cod));
  for (std::size_t x = 0; x < images.size(); ++x) {
    check_pair(r, x, images[x]);
    r.rows_[x] = {static_cast<Index>(images[x])};
  }
  return r;
}

Relation Relation::identity(const FinSet& x) {
  std::vector<std::size_t> id(x.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  return from_map(x, x, id);
}

bool Relation::contains(std::size_t x, std::size_t y) const {
  check_pair(*this, x, y);
  return std::binary_search(rows_[x].begin(), rows_[x].end(), static_cast<Index>(y));
}

void Relation::add(std::size_t x, std::size_t y) {
  check_pair(*this, x, y);
  auto& row = rows_[x];
  auto it = std::lower_bound(row.begin(), row.end(), static_cast<Index>(y));
  if (it == row.end() || *it != y) row.insert(it, static_cast<Index>(y));
}

bool Relation::remove(std::size_t x, std::size_t y) {
  check_pair(*this, x, y);
  auto& row = rows_[x];
  auto it = std::lower_bound(row.begin(), row.end(), static_cast<Index>(y));
  if (it == row.end() || *it != y) return false;
  row.erase(it);
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    for (auto y : rows_[x]) out.emplace_back(x, y);
  }
  return out;
}

std::size_t Relation::pair_count() const {
  std::size_t c = 0;
  for (const auto& row : rows_) c += row.size();
  return c;
}

bool Relation::is_total() const {
  return std::none_of(rows_.begin(), rows_.end(), [](const auto& row) { return row.empty(); });
}

bool Relation::is_partial_function() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const auto& row) { return row.size() <= 1; });
}

Relation compose(const Relation& first, const Relation& second) {
  if (!(first.cod() == second.dom())) throw DimensionMismatch("composition of relations with mismatched objects");
  Relation out(first.dom(), second.cod());
  // Stamp array avoids clearing a bitmap per row.
  std::vector<std::size_t> stamp(second.cod().size(), 0);
  std::vector<Relation::Index> hits;
  for (std::size_t x = 0; x < first.dom().size(); ++x) {
    hits.clear();
    for (auto y : first.image(x)) {
      for (auto z : second.image(y)) {
        if (stamp[z] != x + 1) {
          stamp[z] = x + 1;
          hits.push_back(z);
        }
      }
    }
    std::sort(hits.begin(), hits.end());
    for (auto z : hits) out.add(x, z);
  }
  return out;
}

Relation dagger(const Relation& r) {
  std::vector<std::pair<std::size_t, std::size_t>> flipped;
  for (auto [x, y] : r.pairs()) flipped.emplace_back(y, x);
  return Relation::from_pairs(r.cod(), r.dom(), flipped);
}

Relation product(const Relation& r, const Relation& s) {
  Relation out(r.dom() * s.dom(), r.cod() * s.cod());
  const std::size_t sd = s.dom().size();
  const std::size_t sc = s.cod().size();
  for (std::size_t x = 0; x < r.dom().size(); ++x) {
    for (std::size_t x2 = 0; x2 < sd; ++x2) {
      for (auto y : r.image(x)) {
        for (auto y2 : s.image(x2)) out.add(x * sd + x2, y * sc + y2);
      }
    }
  }
  return out;
}

Relation swap(const FinSet& a, const FinSet& b) {
  std::vector<std::size_t> img(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) img[i * b.size() + j] = j * a.size() + i;
  }
  return Relation::from_map(a * b, b * a, img);
}

Relation diagonal_cup(const FinSet& x) {
  Relation out(FinSet(), x * x);
  for (std::size_t a = 0; a < x.size(); ++a) out.add(0, a * x.size() + a);
  return out;
}

Relation subset_state(const FinSet& x, const std::vector<std::size_t>& members) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (auto m : members) pairs.emplace_back(0, m);
  return Relation::from_pairs(FinSet(), x, pairs);
}

std::vector<std::size_t> state_members(const Relation& state) {
  if (state.dom().size() != 1) throw DimensionMismatch("a state has the one-element set as domain");
  return {state.image(0).begin(), state.image(0).end()};
}

void write_relation(std::ostream& out, const Relation& r) {
  out << "REL dom=" << r.dom().size() << " cod=" << r.cod().size() << '\n';
  for (auto [x, y] : r.pairs()) out << x << ' ' << y << '\n';
}

namespace detail {

Relation read_relation_block(LineReader& r) {
  std::istringstream head(r.next());
  std::string kw, dom_tok, cod_tok, extra;
  head >> kw >> dom_tok >> cod_tok;
  if (kw != "REL") r.fail("expected REL header");
  if (head >> extra) r.fail("trailing text after REL header");
  const std::size_t dom = parse_key(r, dom_tok, "dom");
  const std::size_t cod = parse_key(r, cod_tok, "cod");
  if (dom == 0 || cod == 0) r.fail("relation objects must be non-empty");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  while (!r.done() && std::isdigit(static_cast<unsigned char>(r.peek()[r.peek().find_first_not_of(" \t")]))) {
    const auto nums = parse_numbers(r, r.next());
    if (nums.size() != 2) r.fail("a pair line needs exactly two indices");
    if (nums[0] >= dom || nums[1] >= cod) r.fail("pair index out of range");
    pairs.emplace_back(nums[0], nums[1]);
  }
  return Relation::from_pairs(FinSet(dom), FinSet(cod), pairs);
}

}  // namespace detail

Relation read_relation(std::istream& in) {
  detail::LineReader r(in);
  if (r.done()) throw ParseError("no relation in input");
  auto rel = detail::read_relation_block(r);
  if (!r.done()) r.fail("unexpected content after relation");
  return rel;
}

}  // namespace epistrict
