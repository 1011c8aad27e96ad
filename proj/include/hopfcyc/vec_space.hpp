/**
 * Finite-dimensional vector spaces with labeled bases.
 *
 * A space is an ordered list of primitive factors; its basis is the
 * lexicographic product of the factor bases with the leftmost factor most
 * significant.  The unit space (no factors) is the ground field, dimension 1.
 * Tensor products concatenate factor lists, so (A⊗B)⊗C and A⊗(B⊗C) are the
 * same space.
 */
#ifndef HOPFCYC_VEC_SPACE_HPP
#define HOPFCYC_VEC_SPACE_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "hopfcyc/error.hpp"

namespace hopfcyc {

using Index = std::uint32_t;

class VecSpace
{
public:
    struct Factor
    {
        std::string name;
        std::vector<std::string> labels;
    };

    /// The ground field viewed as a space: no factors, dimension one.
    VecSpace() = default;

    static VecSpace unit() { return {}; }

    static VecSpace primitive(std::string name, std::vector<std::string> labels)
    {
        std::set<std::string> seen(labels.begin(), labels.end());
        if (seen.size() != labels.size())
            throw PreconditionError("basis labels of space '" + name + "' are not unique");
        VecSpace v;
        v.factors_.push_back(std::make_shared<const Factor>(Factor{std::move(name), std::move(labels)}));
        v.dim_ = v.factors_.front()->labels.size();
        return v;
    }

    /// Primitive space with labels prefix0, prefix1, ...
    static VecSpace numbered(std::string name, std::size_t dim, const std::string& prefix = "v")
    {
        std::vector<std::string> labels;
        labels.reserve(dim);
        for (std::size_t i = 0; i < dim; ++i)
            labels.push_back(prefix + std::to_string(i));
        return primitive(std::move(name), std::move(labels));
    }

    std::size_t dim() const { return dim_; }
    std::size_t num_factors() const { return factors_.size(); }
    const Factor& factor(std::size_t i) const { return *factors_.at(i); }

    /// The i-th factor as a space of its own.
    VecSpace factor_space(std::size_t i) const
    {
        VecSpace v;
        v.factors_.push_back(factors_.at(i));
        v.dim_ = factors_[i]->labels.size();
        return v;
    }

    /// Factors [first, first+count) as a space.
    VecSpace slice(std::size_t first, std::size_t count) const
    {
        if (first + count > factors_.size())
            throw ShapeError("factor slice out of range");
        VecSpace v;
        v.dim_ = 1;
        for (std::size_t i = first; i < first + count; ++i) {
            v.factors_.push_back(factors_[i]);
            v.dim_ *= factors_[i]->labels.size();
        }
        return v;
    }

    /// Digits of a flat basis index, one per factor.
    std::vector<Index> decompose(std::size_t flat) const
    {
        std::vector<Index> digits(factors_.size());
        for (std::size_t k = factors_.size(); k-- > 0;) {
            std::size_t d = factors_[k]->labels.size();
            digits[k] = static_cast<Index>(flat % d);
            flat /= d;
        }
        return digits;
    }

    std::size_t compose(const std::vector<Index>& digits) const
    {
        std::size_t flat = 0;
        for (std::size_t k = 0; k < factors_.size(); ++k)
            flat = flat * factors_[k]->labels.size() + digits[k];
        return flat;
    }

    std::string label(std::size_t flat) const
    {
        if (factors_.empty())
            return "1";
        auto digits = decompose(flat);
        std::string out;
        for (std::size_t k = 0; k < digits.size(); ++k) {
            if (k)
                out += "⊗";
            out += factors_[k]->labels[digits[k]];
        }
        return out;
    }

    /// Flat index of a label in a primitive space; throws when absent.
    std::size_t index_of(const std::string& label) const
    {
        if (factors_.size() != 1)
            throw ShapeError("index_of requires a primitive space");
        const auto& labels = factors_.front()->labels;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label)
                return i;
        throw PreconditionError("unknown basis label '" + label + "'");
    }

    std::string name() const
    {
        if (factors_.empty())
            return "k";
        std::string out;
        for (std::size_t k = 0; k < factors_.size(); ++k) {
            if (k)
                out += "⊗";
            out += factors_[k]->name;
        }
        return out;
    }

    friend VecSpace tensor(const VecSpace& a, const VecSpace& b)
    {
        VecSpace v = a;
        v.factors_.insert(v.factors_.end(), b.factors_.begin(), b.factors_.end());
        v.dim_ = a.dim_ * b.dim_;
        return v;
    }

    /// a^{⊗n}; the unit space when n = 0.
    friend VecSpace tensor_power(const VecSpace& a, std::size_t n)
    {
        VecSpace v;
        for (std::size_t i = 0; i < n; ++i)
            v = tensor(v, a);
        return v;
    }

    friend bool operator==(const VecSpace& a, const VecSpace& b)
    {
        if (a.dim_ != b.dim_ || a.factors_.size() != b.factors_.size())
            return false;
        for (std::size_t k = 0; k < a.factors_.size(); ++k) {
            const auto& fa = a.factors_[k];
            const auto& fb = b.factors_[k];
            if (fa != fb && (fa->name != fb->name || fa->labels != fb->labels))
                return false;
        }
        return true;
    }

private:
    std::vector<std::shared_ptr<const Factor>> factors_;
    std::size_t dim_ = 1;
};

}  // namespace hopfcyc

#endif  // HOPFCYC_VEC_SPACE_HPP
