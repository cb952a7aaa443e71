#include "cbal/bignat.hpp"

#include <algorithm>

namespace cbal {

namespace {
constexpr std::uint64_t kBase = 1'000'000'000;
}

BigNat::BigNat(std::uint64_t v) {
    while (v > 0) {
        limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
        v /= kBase;
    }
}

BigNat BigNat::from_u128(unsigned __int128 v) {
    BigNat out;
    while (v > 0) {
        out.limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
        v /= kBase;
    }
    return out;
}

void BigNat::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigNat& BigNat::operator+=(const BigNat& o) {
    limbs_.resize(std::max(limbs_.size(), o.limbs_.size()), 0);
    std::uint64_t carry = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t cur = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
        limbs_[i] = static_cast<std::uint32_t>(cur % kBase);
        carry = cur / kBase;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigNat operator*(const BigNat& a, const BigNat& b) {
    BigNat out;
    if (a.limbs_.empty() || b.limbs_.empty()) return out;
    out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (size_t j = 0; j < b.limbs_.size(); ++j) {
            std::uint64_t cur = out.limbs_[i + j] +
                                static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        size_t pos = i + b.limbs_.size();
        while (carry) {
            std::uint64_t cur = out.limbs_[pos] + carry;
            out.limbs_[pos] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
            ++pos;
        }
    }
    out.trim();
    return out;
}

BigNat BigNat::times_small(std::uint32_t f) const {
    BigNat out;
    if (f == 0 || limbs_.empty()) return out;
    out.limbs_.reserve(limbs_.size() + 1);
    std::uint64_t carry = 0;
    for (std::uint32_t limb : limbs_) {
        std::uint64_t cur = static_cast<std::uint64_t>(limb) * f + carry;
        out.limbs_.push_back(static_cast<std::uint32_t>(cur % kBase));
        carry = cur / kBase;
    }
    while (carry) {
        out.limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
        carry /= kBase;
    }
    return out;
}

std::uint32_t BigNat::mod_small(std::uint32_t m) const {
    std::uint64_t r = 0;
    for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) r = (r * kBase + *it) % m;
    return static_cast<std::uint32_t>(r);
}

std::strong_ordering BigNat::operator<=>(const BigNat& o) const {
    if (limbs_.size() != o.limbs_.size()) return limbs_.size() <=> o.limbs_.size();
    for (size_t i = limbs_.size(); i-- > 0;)
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] <=> o.limbs_[i];
    return std::strong_ordering::equal;
}

std::string BigNat::to_string() const {
    if (limbs_.empty()) return "0";
    std::string out = std::to_string(limbs_.back());
    for (size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string part = std::to_string(limbs_[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

}  // namespace cbal
