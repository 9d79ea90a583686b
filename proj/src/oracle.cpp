#include "relang/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

namespace relang {

namespace {

using WordSet = std::set<Word, ShortlexLess>;

// Words sorted shortlex: everything of length <= k is a contiguous prefix,
// which keeps the concatenation products below output-proportional cost.
std::vector<Word> to_sorted(WordSet&& s) {
    return std::vector<Word>(std::make_move_iterator(s.begin()),
                             std::make_move_iterator(s.end()));
}

Word concat_words(const Word& a, const Word& b) {
    Word out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::vector<Word> enumerate_node(const Regexp& r, std::size_t max_len) {
    switch (r.kind()) {
        case Regexp::Kind::Empty:
            return {Word{}};
        case Regexp::Kind::Singleton:
            if (max_len >= 1) return {Word{r.symbol()}};
            return {};
        case Regexp::Kind::Union: {
            std::vector<Word> a = enumerate_node(r.left(), max_len);
            std::vector<Word> b = enumerate_node(r.right(), max_len);
            std::vector<Word> out;
            out.reserve(a.size() + b.size());
            std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                       ShortlexLess{});
            out.erase(std::unique(out.begin(), out.end()), out.end());
            return out;
        }
        case Regexp::Kind::Concat: {
            std::vector<Word> a = enumerate_node(r.left(), max_len);
            std::vector<Word> b = enumerate_node(r.right(), max_len);
            WordSet out;
            for (const Word& u : a) {
                if (u.size() > max_len) break;
                for (const Word& v : b) {
                    if (u.size() + v.size() > max_len) break;
                    out.insert(concat_words(u, v));
                }
            }
            return to_sorted(std::move(out));
        }
        case Regexp::Kind::Star: {
            // Least fixed point of S <- {e} union body.S, truncated at
            // max_len. The empty word is dropped from the body first, so
            // every step consumes at least one symbol and the loop ends.
            std::vector<Word> body = enumerate_node(r.body(), max_len);
            std::erase_if(body, [](const Word& w) { return w.empty(); });
            WordSet out;
            std::deque<Word> queue;
            out.insert(Word{});
            queue.push_back(Word{});
            while (!queue.empty()) {
                Word w = std::move(queue.front());
                queue.pop_front();
                for (const Word& u : body) {
                    if (u.size() + w.size() > max_len) break;
                    Word next = concat_words(u, w);
                    if (out.insert(next).second) queue.push_back(std::move(next));
                }
            }
            return to_sorted(std::move(out));
        }
    }
    return {};
}

struct SliceKey {
    const Regexp* node;
    std::size_t lo;
    std::size_t hi;

    bool operator==(const SliceKey&) const = default;
};

struct SliceKeyHash {
    std::size_t operator()(const SliceKey& k) const {
        std::size_t h = std::hash<const void*>{}(k.node);
        h = h * 1000003u ^ k.lo;
        h = h * 1000003u ^ k.hi;
        return h;
    }
};

// Split-based structural recursion with memoization on (subexpression,
// word slice); child Regexp objects live inside their parent's node, so
// their addresses are stable for the whole match.
class Matcher {
public:
    explicit Matcher(const Word& w) : w_(w) {}

    bool match(const Regexp& r, std::size_t lo, std::size_t hi) {
        switch (r.kind()) {
            case Regexp::Kind::Empty:
                return lo == hi;
            case Regexp::Kind::Singleton:
                return hi - lo == 1 && w_[lo] == r.symbol();
            case Regexp::Kind::Union:
                return match(r.left(), lo, hi) || match(r.right(), lo, hi);
            case Regexp::Kind::Concat: {
                auto [it, fresh] = memo_.try_emplace(SliceKey{&r, lo, hi}, false);
                if (!fresh) return it->second;
                bool ok = false;
                for (std::size_t mid = lo; mid <= hi && !ok; ++mid) {
                    ok = match(r.left(), lo, mid) && match(r.right(), mid, hi);
                }
                memo_[SliceKey{&r, lo, hi}] = ok;
                return ok;
            }
            case Regexp::Kind::Star: {
                if (lo == hi) return true;
                auto [it, fresh] = memo_.try_emplace(SliceKey{&r, lo, hi}, false);
                if (!fresh) return it->second;
                // The consumed prefix is non-empty, so recursion on the
                // suffix terminates even when the body accepts the empty
                // word.
                bool ok = false;
                for (std::size_t mid = lo + 1; mid <= hi && !ok; ++mid) {
                    ok = match(r.body(), lo, mid) && match(r, mid, hi);
                }
                memo_[SliceKey{&r, lo, hi}] = ok;
                return ok;
            }
        }
        return false;
    }

private:
    const Word& w_;
    std::unordered_map<SliceKey, bool, SliceKeyHash> memo_;
};

}  // namespace

bool LanguageSample::contains(const Word& w) const {
    return std::binary_search(words.begin(), words.end(), w, ShortlexLess{});
}

LanguageSample enumerate_upto(const Regexp& r, std::size_t max_len) {
    return LanguageSample{enumerate_node(r, max_len), max_len};
}

bool member(const Regexp& r, const Word& w) {
    Matcher m(w);
    return m.match(r, 0, w.size());
}

bool lang_equal_upto(const Regexp& r1, const Regexp& r2, std::size_t max_len) {
    return enumerate_upto(r1, max_len).words == enumerate_upto(r2, max_len).words;
}

}  // namespace relang
