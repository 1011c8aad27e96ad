/**
 * Named pass/fail verification results.  Every structural claim the library
 * verifies is recorded here, with the first failing basis vector as witness.
 */
#ifndef HOPFCYC_CHECK_REPORT_HPP
#define HOPFCYC_CHECK_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfcyc/lin_map.hpp"

namespace hopfcyc {

struct CheckEntry
{
    std::string name;
    bool passed = false;
    std::string witness;  // empty on success
};

class CheckReport
{
public:
    void record(std::string name, bool passed, std::string witness = {})
    {
        entries_.push_back({std::move(name), passed, std::move(witness)});
    }

    /// Record whether lhs == rhs as maps; the witness names the first domain basis vector where they differ.
    template <Field K>
    bool expect_equal(std::string name, const LinMap<K>& lhs, const LinMap<K>& rhs)
    {
        if (!(lhs.domain() == rhs.domain()) || !(lhs.codomain() == rhs.codomain())) {
            record(std::move(name), false,
                   "shape mismatch: " + lhs.domain().name() + " -> " + lhs.codomain().name() + " vs " +
                       rhs.domain().name() + " -> " + rhs.codomain().name());
            return false;
        }
        auto diff = lhs.first_difference(rhs);
        record(std::move(name), !diff, diff ? "first failing basis vector " + lhs.domain().label(*diff) : "");
        return !diff;
    }

    template <Field K>
    bool expect_zero(std::string name, const LinMap<K>& f)
    {
        return expect_equal(std::move(name), f, LinMap<K>::zero(f.field(), f.domain(), f.codomain()));
    }

    /// Append another report, prefixing its entry names.
    void merge(const CheckReport& other, const std::string& prefix = {})
    {
        for (const auto& e : other.entries_)
            entries_.push_back({prefix + e.name, e.passed, e.witness});
    }

    bool all_passed() const
    {
        for (const auto& e : entries_)
            if (!e.passed)
                return false;
        return true;
    }

    bool passed(const std::string& name) const
    {
        for (const auto& e : entries_)
            if (e.name == name)
                return e.passed;
        return false;
    }

    bool contains(const std::string& name) const
    {
        for (const auto& e : entries_)
            if (e.name == name)
                return true;
        return false;
    }

    std::optional<CheckEntry> first_failure() const
    {
        for (const auto& e : entries_)
            if (!e.passed)
                return e;
        return std::nullopt;
    }

    std::size_t size() const { return entries_.size(); }
    std::size_t failures() const
    {
        std::size_t n = 0;
        for (const auto& e : entries_)
            n += !e.passed;
        return n;
    }
    const std::vector<CheckEntry>& entries() const { return entries_; }

private:
    std::vector<CheckEntry> entries_;
};

}  // namespace hopfcyc

#endif  // HOPFCYC_CHECK_REPORT_HPP
