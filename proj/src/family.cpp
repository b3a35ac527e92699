#include "branchkit/family.hpp"

#include <charconv>
#include <string>

#include "branchkit/errors.hpp"

namespace branchkit {

GroupFamily GroupFamily::su(int m, int n) {
    if (m < 1 || n < 1 || m + n < 3)
        throw validation_error("SU(m,n) needs m >= 1, n >= 1, m + n >= 3; got SU(" +
                               std::to_string(m) + "," + std::to_string(n) + ")");
    return GroupFamily(FamilyKind::SU, m, n);
}

GroupFamily GroupFamily::soe(int n) {
    if (n < 2) throw validation_error("SO_0(2,2n) needs n >= 2; got n = " + std::to_string(n));
    return GroupFamily(FamilyKind::SOe, 0, n);
}

GroupFamily GroupFamily::sostar(int n) {
    if (n < 3) throw validation_error("SO*(2n) needs n >= 3; got n = " + std::to_string(n));
    return GroupFamily(FamilyKind::SOstar, 0, n);
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw validation_error("bad family spec '" + std::string(whole) + "'");
    return v;
}

}  // namespace

GroupFamily GroupFamily::parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw validation_error("bad family spec '" + std::string(text) +
                               "' (expected su:m,n | soe:n | sostar:n)");
    auto tag = text.substr(0, colon);
    auto args = text.substr(colon + 1);
    if (tag == "su") {
        auto comma = args.find(',');
        if (comma == std::string_view::npos)
            throw validation_error("bad family spec '" + std::string(text) + "'");
        return su(parse_int(args.substr(0, comma), text), parse_int(args.substr(comma + 1), text));
    }
    if (tag == "soe") return soe(parse_int(args, text));
    if (tag == "sostar") return sostar(parse_int(args, text));
    throw validation_error("unknown family '" + std::string(tag) + "'");
}

int GroupFamily::k_size() const noexcept {
    switch (kind_) {
        case FamilyKind::SU: return m_ + n_;
        case FamilyKind::SOe: return n_ + 1;
        case FamilyKind::SOstar: return n_;
    }
    return 0;
}

int GroupFamily::km_size() const noexcept {
    switch (kind_) {
        case FamilyKind::SU: return m_ + n_ - 1;
        case FamilyKind::SOe: return n_;
        case FamilyKind::SOstar: return n_ - 1;
    }
    return 0;
}

std::string GroupFamily::str() const {
    switch (kind_) {
        case FamilyKind::SU: return "su:" + std::to_string(m_) + "," + std::to_string(n_);
        case FamilyKind::SOe: return "soe:" + std::to_string(n_);
        case FamilyKind::SOstar: return "sostar:" + std::to_string(n_);
    }
    return {};
}

std::string GroupFamily::display_name() const {
    switch (kind_) {
        case FamilyKind::SU: return "SU(" + std::to_string(m_) + "," + std::to_string(n_) + ")";
        case FamilyKind::SOe: return "SO0(2," + std::to_string(2 * n_) + ")";
        case FamilyKind::SOstar: return "SO*(" + std::to_string(2 * n_) + ")";
    }
    return {};
}

}  // namespace branchkit
