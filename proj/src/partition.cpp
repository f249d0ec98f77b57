#include "symineq/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symineq {

namespace {

constexpr unsigned kMaxBlockRepeat = 100000;

unsigned parse_uint(const std::string& tok, const std::string& ctx) {
    if (tok.empty()) throw std::invalid_argument("empty number in partition '" + ctx + "'");
    unsigned long v = 0;
    for (char c : tok) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("bad character '" + std::string(1, c) +
                                        "' in partition '" + ctx + "'");
        v = v * 10 + static_cast<unsigned long>(c - '0');
        if (v > kMaxBlockRepeat)
            throw std::invalid_argument("part or repeat count too large in '" + ctx + "'");
    }
    return static_cast<unsigned>(v);
}

}  // namespace

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
        if (parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    if (!parts_.empty() && parts_.back() == 0)
        throw std::invalid_argument("interior zero part");  // unreachable after stripping
    unsigned long sum = std::accumulate(parts_.begin(), parts_.end(), 0ul);
    degree_ = static_cast<unsigned>(sum);
}

Partition Partition::parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (c != ' ' && c != '\t') s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty partition literal");

    std::vector<unsigned> parts;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t caret = tok.find('^');
        unsigned value, repeat = 1;
        if (caret == std::string::npos) {
            value = parse_uint(tok, text);
        } else {
            value = parse_uint(tok.substr(0, caret), text);
            repeat = parse_uint(tok.substr(caret + 1), text);
            if (repeat == 0) throw std::invalid_argument("zero repeat count in '" + text + "'");
        }
        parts.insert(parts.end(), repeat, value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
        if (pos == s.size()) throw std::invalid_argument("trailing comma in '" + text + "'");
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

std::string Partition::block_str() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < parts_.size()) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        if (!first) os << ',';
        os << parts_[i];
        if (j - i > 1) os << '^' << (j - i);
        first = false;
        i = j;
    }
    return os.str();
}

std::vector<Partition> enumerate_partitions(unsigned d) {
    if (d == 0) throw std::domain_error("enumerate_partitions requires d >= 1");
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    // Descending-lex generation: start at (d); at each step decrement the
    // last part > 1 and greedily refill the remainder.
    cur.push_back(d);
    for (;;) {
        out.emplace_back(cur);
        // find rightmost part > 1
        std::size_t k = cur.size();
        while (k > 0 && cur[k - 1] == 1) --k;
        if (k == 0) break;  // all ones: (1^d) is last
        unsigned rem = static_cast<unsigned>(cur.size() - k);  // ones removed
        cur.resize(k);
        cur[k - 1] -= 1;
        rem += 1;
        // refill rem with parts as large as allowed (= cur[k-1])
        unsigned cap = cur[k - 1];
        while (rem > 0) {
            unsigned part = std::min(cap, rem);
            cur.push_back(part);
            rem -= part;
        }
    }
    return out;
}

bool majorizes(const Partition& mu, const Partition& lambda) {
    if (mu.degree() != lambda.degree())
        throw std::domain_error("majorization compares partitions of equal degree");
    const auto& a = mu.parts();
    const auto& b = lambda.parts();
    std::size_t len = std::max(a.size(), b.size());
    unsigned long pa = 0, pb = 0;
    for (std::size_t j = 0; j < len; ++j) {
        pa += j < a.size() ? a[j] : 0;
        pb += j < b.size() ? b[j] : 0;
        if (pa < pb) return false;
    }
    return true;
}

std::pair<Partition, Partition> counterexample_pair(unsigned d) {
    if (d < 8) throw std::domain_error("counterexample_pair is defined for d >= 8");
    std::vector<unsigned> mu(d / 2, 2);
    if (d % 2) mu.push_back(1);
    std::vector<unsigned> lam;
    lam.push_back(3);
    lam.insert(lam.end(), d - 3, 1);
    return {Partition(std::move(mu)), Partition(std::move(lam))};
}

}  // namespace symineq
