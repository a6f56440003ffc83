#pragma once

namespace hbch::detail {

/// Contents of data/conway_polynomials.txt, embedded at configure time.
extern const char *const kBundledConwayText;

}  // namespace hbch::detail
