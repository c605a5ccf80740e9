#include "lvc/kernels.hpp"

namespace lvc::kernels {

const Ops& ops() {
    static const Ops& picked = []() -> const Ops& {
        if (const Ops* v = avx2_ops()) return *v;
        return scalar_ops();
    }();
    return picked;
}

}  // namespace lvc::kernels
