#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cdm {

/// Opaque worker label. The requester is a distinguished id carried by the
/// network; it never appears inside a children report.
using WorkerId = std::int64_t;

/// Identity token of one atomic datum. Items are compared by id only.
using ItemId = std::int64_t;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidNetworkError : Error { using Error::Error; };
struct InvalidProfileError : Error { using Error::Error; };
struct MissingRequesterError : Error { using Error::Error; };
struct UnknownWorkerError : Error { using Error::Error; };
struct InvalidDeviationError : Error { using Error::Error; };
struct SchemaMismatchError : Error { using Error::Error; };
struct InvalidDatumError : Error { using Error::Error; };
struct CapacityError : Error { using Error::Error; };
struct InvalidParamsError : Error { using Error::Error; };
struct FeasibilityError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace cdm
