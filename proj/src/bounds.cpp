#include "mbounds/bounds.hpp"

namespace mbounds {

const char* to_string(BoundKind k) noexcept {
    switch (k) {
    case BoundKind::lower: return "lower";
    case BoundKind::upper: return "upper";
    case BoundKind::two_sided: return "two_sided";
    case BoundKind::check: return "check";
    }
    return "?";
}

const char* to_string(BoundTarget t) noexcept {
    switch (t) {
    case BoundTarget::m2r: return "m2r";
    case BoundTarget::m3: return "m3";
    case BoundTarget::m3_raw: return "m3_raw";
    case BoundTarget::m4: return "m4";
    case BoundTarget::m4_combo: return "m4_combo";
    case BoundTarget::x_j: return "x_j";
    case BoundTarget::x_kj: return "x_kj";
    case BoundTarget::d_j: return "d_j";
    case BoundTarget::spread: return "spread";
    case BoundTarget::span: return "span";
    case BoundTarget::check: return "check";
    }
    return "?";
}

} // namespace mbounds
