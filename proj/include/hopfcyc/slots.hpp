/**
 * Building maps between tensor products slot by slot.
 *
 * A `SlotPipeline` starts from a domain space viewed as a list of primitive
 * factors ("slots").  Each step either applies a linear map to a run of
 * consecutive slots (consuming as many slots as the map's domain has factors
 * and inserting its codomain factors) or permutes the slots.  Running the
 * pipeline on every domain basis vector yields the LinMap.  Slot spaces are
 * tracked symbolically, so a step whose map does not fit the slots it is
 * applied to throws at record time.
 */
#ifndef HOPFCYC_SLOTS_HPP
#define HOPFCYC_SLOTS_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hopfcyc/lin_map.hpp"

namespace hopfcyc {

template <Field K>
class SlotPipeline
{
public:
    using V = typename K::value_type;

    SlotPipeline(const K& field, const VecSpace& domain) : field_(field), domain_(domain)
    {
        for (std::size_t i = 0; i < domain.num_factors(); ++i)
            slots_.push_back(domain.factor_space(i));
    }

    std::size_t num_slots() const { return slots_.size(); }
    const VecSpace& slot(std::size_t i) const { return slots_.at(i); }

    /// Apply f to slots [first, first + #factors(f.domain)).
    SlotPipeline& apply(std::size_t first, const LinMap<K>& f)
    {
        const std::size_t consumed = f.domain().num_factors();
        if (first + consumed > slots_.size())
            throw ShapeError("slot pipeline: map " + f.domain().name() + " -> " + f.codomain().name() +
                             " applied past the last slot");
        for (std::size_t k = 0; k < consumed; ++k)
            if (!(slots_[first + k] == f.domain().factor_space(k)))
                throw ShapeError("slot pipeline: slot " + std::to_string(first + k) + " holds " +
                                 slots_[first + k].name() + " but the map expects " +
                                 f.domain().factor_space(k).name());
        Apply step{first, consumed, f.codomain().num_factors(), f.domain(), {}};
        step.images.resize(f.cols());
        for (std::size_t j = 0; j < f.cols(); ++j)
            for (const auto& e : f.column(j))
                step.images[j].push_back({f.codomain().decompose(e.index), e.value});
        std::vector<VecSpace> inserted;
        for (std::size_t k = 0; k < f.codomain().num_factors(); ++k)
            inserted.push_back(f.codomain().factor_space(k));
        slots_.erase(slots_.begin() + static_cast<long>(first), slots_.begin() + static_cast<long>(first + consumed));
        slots_.insert(slots_.begin() + static_cast<long>(first), inserted.begin(), inserted.end());
        steps_.push_back(std::move(step));
        return *this;
    }

    /// New slot i is old slot order[i]; order must be a permutation.
    SlotPipeline& permute(std::vector<std::size_t> order)
    {
        if (order.size() != slots_.size())
            throw ShapeError("slot pipeline: permutation has wrong length");
        std::vector<char> seen(order.size(), 0);
        for (std::size_t o : order) {
            if (o >= order.size() || seen[o])
                throw ShapeError("slot pipeline: not a permutation");
            seen[o] = 1;
        }
        std::vector<VecSpace> next;
        for (std::size_t o : order)
            next.push_back(slots_[o]);
        slots_ = std::move(next);
        steps_.push_back(Permute{std::move(order)});
        return *this;
    }

    /// Move slot `from` to position `to`, shifting the slots in between.
    SlotPipeline& move(std::size_t from, std::size_t to)
    {
        std::vector<std::size_t> order(slots_.size());
        std::iota(order.begin(), order.end(), 0);
        auto v = order[from];
        order.erase(order.begin() + static_cast<long>(from));
        order.insert(order.begin() + static_cast<long>(to), v);
        return permute(std::move(order));
    }

    /// Run the pipeline; `codomain` must be the tensor product of the final slots.
    LinMap<K> build(const VecSpace& codomain) const
    {
        VecSpace expected;
        for (const auto& s : slots_)
            expected = tensor(expected, s);
        if (!(expected == codomain))
            throw ShapeError("slot pipeline: final slots form " + expected.name() + ", not " + codomain.name());
        LinMap<K> out(field_, domain_, codomain);
        SparseAccumulator<K> acc(field_, codomain.dim());
        std::vector<Term> terms, next;
        for (std::size_t j = 0; j < domain_.dim(); ++j) {
            terms.clear();
            terms.push_back({domain_.decompose(j), field_.one()});
            for (const auto& step : steps_) {
                next.clear();
                std::visit([&](const auto& s) { run(s, terms, next); }, step);
                std::swap(terms, next);
                if (terms.size() > 1)
                    merge(terms);
            }
            for (const auto& t : terms)
                acc.add(static_cast<Index>(codomain.compose(t.digits)), t.coeff);
            out.set_column(j, acc.extract());
        }
        return out;
    }

    /// Build with the codomain taken to be the tensor product of the final slots.
    LinMap<K> build() const
    {
        VecSpace cod;
        for (const auto& s : slots_)
            cod = tensor(cod, s);
        return build(cod);
    }

private:
    struct Term
    {
        std::vector<Index> digits;
        V coeff;
    };

    struct Apply
    {
        std::size_t first, consumed, inserted;
        VecSpace domain;
        std::vector<std::vector<std::pair<std::vector<Index>, V>>> images;
    };

    struct Permute
    {
        std::vector<std::size_t> order;
    };

    void run(const Apply& s, const std::vector<Term>& in, std::vector<Term>& out) const
    {
        std::vector<Index> sub(s.consumed);
        for (const auto& t : in) {
            std::copy(t.digits.begin() + static_cast<long>(s.first),
                      t.digits.begin() + static_cast<long>(s.first + s.consumed), sub.begin());
            for (const auto& [digits, c] : s.images[s.domain.compose(sub)]) {
                Term n;
                n.digits.reserve(t.digits.size() - s.consumed + s.inserted);
                n.digits.insert(n.digits.end(), t.digits.begin(), t.digits.begin() + static_cast<long>(s.first));
                n.digits.insert(n.digits.end(), digits.begin(), digits.end());
                n.digits.insert(n.digits.end(), t.digits.begin() + static_cast<long>(s.first + s.consumed),
                                t.digits.end());
                n.coeff = field_.mul(t.coeff, c);
                out.push_back(std::move(n));
            }
        }
    }

    void run(const Permute& s, const std::vector<Term>& in, std::vector<Term>& out) const
    {
        for (const auto& t : in) {
            Term n;
            n.digits.resize(s.order.size());
            for (std::size_t i = 0; i < s.order.size(); ++i)
                n.digits[i] = t.digits[s.order[i]];
            n.coeff = t.coeff;
            out.push_back(std::move(n));
        }
    }

    void merge(std::vector<Term>& terms) const
    {
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.digits < b.digits; });
        std::size_t w = 0;
        for (std::size_t r = 0; r < terms.size(); ++r) {
            if (w > 0 && terms[w - 1].digits == terms[r].digits) {
                terms[w - 1].coeff = field_.add(terms[w - 1].coeff, terms[r].coeff);
            } else {
                if (w > 0 && field_.is_zero(terms[w - 1].coeff))
                    --w;
                if (w != r)
                    terms[w] = std::move(terms[r]);
                ++w;
            }
        }
        if (w > 0 && field_.is_zero(terms[w - 1].coeff))
            --w;
        terms.resize(w);
    }

    K field_;
    VecSpace domain_;
    std::vector<VecSpace> slots_;
    std::vector<std::variant<Apply, Permute>> steps_;
};

}  // namespace hopfcyc

#endif  // HOPFCYC_SLOTS_HPP
