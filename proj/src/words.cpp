#include "odometer/words.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace odometer {

namespace {

void check_letters(Letter floor, const std::vector<Letter>& letters, const char* what) {
  for (Letter a : letters)
    if (a < floor)
      throw std::invalid_argument(std::string(what) + ": letter " + std::to_string(a) + " below floor " +
                                  std::to_string(floor));
}

std::string join(const std::vector<Letter>& letters) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters[i]);
  }
  return out;
}

Letter parse_letter(const std::string& tok) {
  std::size_t used = 0;
  Letter v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed letter '" + tok + "'");
  }
  if (used != tok.size()) throw std::invalid_argument("malformed letter '" + tok + "'");
  return v;
}

// Letters separated by commas or by whitespace, optionally wrapped in () or [].
std::vector<Letter> parse_letters(std::string text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  text = text.substr(first, text.find_last_not_of(" \t") - first + 1);
  if ((text.front() == '(' && text.back() == ')') || (text.front() == '[' && text.back() == ']'))
    text = text.substr(1, text.size() - 2);
  std::vector<Letter> out;
  if (text.find(',') == std::string::npos) {
    std::istringstream in(text);
    for (std::string tok; in >> tok;) out.push_back(parse_letter(tok));
    return out;
  }
  std::istringstream in(text);
  for (std::string field; std::getline(in, field, ',');) {
    std::istringstream one(field);
    std::string tok, extra;
    if (!(one >> tok) || (one >> extra)) throw std::invalid_argument("malformed letter list '" + text + "'");
    out.push_back(parse_letter(tok));
  }
  if (text.back() == ',') throw std::invalid_argument("trailing comma in '" + text + "'");
  return out;
}

// Lengths k of the consecutive blocks 1^k 0; `bits` must end in 0.
std::vector<Letter> parse_blocks(const std::vector<Letter>& bits) {
  std::vector<Letter> out;
  Letter ones = 0;
  for (Letter b : bits) {
    if (b == 1) {
      ++ones;
    } else {
      out.push_back(ones);
      ones = 0;
    }
  }
  return out;
}

}  // namespace

// FiniteWord ----------------------------------------------------------------

FiniteWord::FiniteWord(Letter floor, std::vector<Letter> letters) : floor_(floor), letters_(std::move(letters)) {
  if (floor_ < 0) throw std::invalid_argument("FiniteWord: negative floor");
  if (letters_.empty()) throw std::invalid_argument("FiniteWord: empty word");
  check_letters(floor_, letters_, "FiniteWord");
}

std::string FiniteWord::to_string() const { return "(" + join(letters_) + ")"; }

std::ostream& operator<<(std::ostream& os, const FiniteWord& w) { return os << w.to_string(); }

std::size_t FiniteWordHash::operator()(const FiniteWord& w) const {
  std::size_t h = static_cast<std::size_t>(w.floor()) * 0x9e3779b97f4a7c15ULL;
  for (Letter a : w.letters()) h = (h ^ static_cast<std::size_t>(a)) * 0x100000001b3ULL;
  return h;
}

// TailWord ------------------------------------------------------------------

TailWord::TailWord(Letter floor, std::vector<Letter> preperiod, std::vector<Letter> period)
    : floor_(floor), pre_(std::move(preperiod)), per_(std::move(period)) {
  if (floor_ < 0) throw std::invalid_argument("TailWord: negative floor");
  if (per_.empty()) throw std::invalid_argument("TailWord: empty period");
  check_letters(floor_, pre_, "TailWord");
  check_letters(floor_, per_, "TailWord");
  normalize();
}

void TailWord::normalize() {
  const std::size_t p = per_.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d) continue;
    bool repeats = true;
    for (std::size_t i = d; i < p && repeats; ++i) repeats = per_[i] == per_[i - d];
    if (repeats) {
      per_.resize(d);
      break;
    }
  }
  while (!pre_.empty() && pre_.back() == per_.back()) {
    pre_.pop_back();
    std::rotate(per_.rbegin(), per_.rbegin() + 1, per_.rend());
  }
}

Letter TailWord::letter(std::uint64_t i) const {
  if (i == 0) throw std::out_of_range("TailWord::letter is 1-based");
  const std::uint64_t idx = i - 1;
  if (idx < pre_.size()) return pre_[idx];
  return per_[(idx - pre_.size()) % per_.size()];
}

std::vector<Letter> TailWord::prefix(std::size_t n) const {
  std::vector<Letter> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(letter(i));
  return out;
}

TailWord TailWord::drop(std::uint64_t count) const {
  if (count <= pre_.size())
    return TailWord(floor_, std::vector<Letter>(pre_.begin() + static_cast<std::ptrdiff_t>(count), pre_.end()), per_);
  std::vector<Letter> per = per_;
  const auto r = static_cast<std::ptrdiff_t>((count - pre_.size()) % per.size());
  std::rotate(per.begin(), per.begin() + r, per.end());
  return TailWord(floor_, {}, std::move(per));
}

TailWord TailWord::prepend(std::span<const Letter> head) const {
  std::vector<Letter> pre(head.begin(), head.end());
  pre.insert(pre.end(), pre_.begin(), pre_.end());
  return TailWord(floor_, std::move(pre), per_);
}

bool TailWord::is_binary() const {
  const auto bit = [](Letter a) { return a == 0 || a == 1; };
  return floor_ == 0 && std::all_of(pre_.begin(), pre_.end(), bit) && std::all_of(per_.begin(), per_.end(), bit);
}

std::string TailWord::to_string() const { return join(pre_) + ";" + join(per_); }

TailWord TailWord::parse(Letter floor, const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos) throw std::invalid_argument("tail word needs ';' between preperiod and period");
  return TailWord(floor, parse_letters(text.substr(0, semi)), parse_letters(text.substr(semi + 1)));
}

Letter TailWord::Cursor::next() { return word_->letter(++index_); }

std::ostream& operator<<(std::ostream& os, const TailWord& w) { return os << w.to_string(); }

// TreeAddress ---------------------------------------------------------------

TreeAddress::TreeAddress(std::int64_t level, Natural position) : level_(level), position_(std::move(position)) {
  if (level_ < 1) throw std::invalid_argument("TreeAddress: level must be >= 1");
  if (position_ < 0 || position_ >= pow2(static_cast<std::uint64_t>(level_ - 1)))
    throw std::invalid_argument("TreeAddress: position out of range for level " + std::to_string(level_));
}

std::ostream& operator<<(std::ostream& os, const TreeAddress& a) {
  return os << "(" << a.level() << ", " << a.position().get_str(10) << ")";
}

// Level / position arithmetic -----------------------------------------------

std::int64_t sum_k(const FiniteWord& w) {
  std::int64_t s = 0;
  for (Letter a : w.letters()) s += a - (w.floor() - 1);
  return s;
}

Natural position_index(const FiniteWord& w) {
  Natural n = 0;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    const auto a = static_cast<std::uint64_t>(*it - (w.floor() - 1));
    n <<= a;
    n += pow2(a - 1) - 1;
  }
  return n;
}

FiniteWord word_at(std::int64_t level, const Natural& position, Letter floor) {
  if (level < 1) throw std::invalid_argument("word_at: level must be >= 1");
  if (floor < 0) throw std::invalid_argument("word_at: negative floor");
  if (position < 0 || position >= pow2(static_cast<std::uint64_t>(level - 1)))
    throw std::out_of_range("word_at: position out of range for level " + std::to_string(level));

  // The level-bit string 0 b_{l-2} ... b_0 splits into blocks 0 1^m, one per
  // letter, from the last letter to the first. A trailing run of ones is the
  // final (first-letter) block.
  std::vector<Letter> reversed;
  for (std::int64_t bit = level - 1; bit >= 0; --bit) {
    if (mpz_tstbit(position.get_mpz_t(), static_cast<mp_bitcnt_t>(bit)))
      ++reversed.back();
    else
      reversed.push_back(floor);
  }
  return FiniteWord(floor, std::vector<Letter>(reversed.rbegin(), reversed.rend()));
}

std::strong_ordering compare_rlex(const FiniteWord& a, const FiniteWord& b) {
  if (a.floor() != b.floor()) throw std::invalid_argument("compare_rlex: floor mismatch");
  if (auto c = sum_k(a) <=> sum_k(b); c != 0) return c;
  auto ia = a.letters().rbegin();
  auto ib = b.letters().rbegin();
  for (; ia != a.letters().rend() && ib != b.letters().rend(); ++ia, ++ib)
    if (auto c = *ia <=> *ib; c != 0) return c;
  // Equal sums and one word a suffix of the other forces equality.
  return a.size() <=> b.size();
}

FiniteWord shift_alphabet(const FiniteWord& w, Letter to_floor) {
  if (to_floor < 0) throw std::invalid_argument("shift_alphabet: negative target floor");
  std::vector<Letter> out = w.letters();
  for (Letter& a : out) a += to_floor - w.floor();
  return FiniteWord(to_floor, std::move(out));
}

Natural total_index(const FiniteWord& w) {
  return pow2(static_cast<std::uint64_t>(sum_k(w) - 1)) + position_index(w) - 1;
}

// Block recoding ------------------------------------------------------------

TailWord block_encode(const TailWord& w) {
  if (!w.is_binary()) throw std::invalid_argument("block_encode: word is not binary");
  const auto& per = w.period();
  const auto last_zero = std::find(per.rbegin(), per.rend(), 0);
  if (last_zero == per.rend()) throw std::invalid_argument("block_encode: word ends in all ones");

  // Split the sequence right after the last zero of the first period copy so
  // that both the new preperiod and the new period end on a block boundary.
  const auto cut = static_cast<std::size_t>(per.rend() - last_zero);
  std::vector<Letter> pre = w.preperiod();
  pre.insert(pre.end(), per.begin(), per.begin() + static_cast<std::ptrdiff_t>(cut));
  std::vector<Letter> rot(per.begin() + static_cast<std::ptrdiff_t>(cut), per.end());
  rot.insert(rot.end(), per.begin(), per.begin() + static_cast<std::ptrdiff_t>(cut));
  return TailWord(0, parse_blocks(pre), parse_blocks(rot));
}

TailWord block_decode(const TailWord& v) {
  if (v.floor() != 0) throw std::invalid_argument("block_decode: expects a word over the naturals (floor 0)");
  const auto expand = [](const std::vector<Letter>& ks) {
    std::vector<Letter> bits;
    for (Letter k : ks) {
      bits.insert(bits.end(), static_cast<std::size_t>(k), 1);
      bits.push_back(0);
    }
    return bits;
  };
  return TailWord(0, expand(v.preperiod()), expand(v.period()));
}

// Text / JSON ---------------------------------------------------------------

FiniteWord parse_word(Letter floor, const std::string& text) {
  auto letters = parse_letters(text);
  if (letters.empty()) throw std::invalid_argument("empty word '" + text + "'");
  return FiniteWord(floor, std::move(letters));
}

void to_json(nlohmann::json& j, const FiniteWord& w) { j = {{"floor", w.floor()}, {"word", w.letters()}}; }

void to_json(nlohmann::json& j, const TailWord& w) {
  j = {{"pre", w.preperiod()}, {"per", w.period()}, {"floor", w.floor()}};
}

FiniteWord finite_word_from_json(const nlohmann::json& j) {
  return FiniteWord(j.at("floor").get<Letter>(), j.at("word").get<std::vector<Letter>>());
}

TailWord tail_word_from_json(const nlohmann::json& j) {
  return TailWord(j.at("floor").get<Letter>(), j.at("pre").get<std::vector<Letter>>(),
                  j.at("per").get<std::vector<Letter>>());
}

}  // namespace odometer
