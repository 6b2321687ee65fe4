// Copyright 2026 The typerun Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <string_view>

#include "typerun/kernels.hpp"

namespace typerun::kernels {

std::vector<const KernelTable*> available_kernels() {
    std::vector<const KernelTable*> tables{&scalar_kernels()};
    if (const KernelTable* avx2 = avx2_kernels()) tables.push_back(avx2);
    return tables;
}

const KernelTable& active_kernels() noexcept {
    static const KernelTable& chosen = [] () -> const KernelTable& {
        const char* forced = std::getenv("TYPERUN_KERNELS");
        if (forced != nullptr && std::string_view(forced) == "scalar") return scalar_kernels();
        if (const KernelTable* avx2 = avx2_kernels()) return *avx2;
        return scalar_kernels();
    }();
    return chosen;
}

}  // namespace typerun::kernels
