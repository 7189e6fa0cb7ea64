// Copyright 2026 The qpinn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpinn/qpinn.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "qpinn/error.hpp"
#include "qpinn/experiment.hpp"
#include "qpinn/features.hpp"
#include "qpinn/pinn.hpp"
#include "qpinn/qsim.hpp"
#include "qpinn/validate.hpp"
#include "qpinn/artifacts.hpp"

struct qpinn_config {
    qpinn::RunConfig run;
};

struct qpinn_model {
    qpinn::TrainReport report;
    qpinn::DerivativeMode mode;
};

namespace {

thread_local std::string g_last_error;

qpinn_status fail(qpinn_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
qpinn_status guarded(F &&body) {
    g_last_error.clear();
    try {
        body();
        return QPINN_OK;
    } catch (const qpinn::InvalidArgument &e) {
        return fail(QPINN_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const qpinn::IoError &e) {
        return fail(QPINN_ERROR_IO, e.what());
    } catch (const qpinn::DivergenceError &e) {
        return fail(QPINN_ERROR_DIVERGED, e.what());
    } catch (const std::bad_alloc &) {
        return fail(QPINN_ERROR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(QPINN_ERROR_INTERNAL, e.what());
    } catch (...) {
        return fail(QPINN_ERROR_INTERNAL, "unknown error");
    }
}

void require(bool condition, const char *what) {
    if (!condition) {
        throw qpinn::InvalidArgument(what);
    }
}

// Copies `text` with the size-query protocol used by the getters.
void copy_out(const std::string &text, char *buffer, std::size_t capacity, std::size_t *required) {
    if (required) {
        *required = text.size() + 1;
    }
    if (buffer == nullptr && capacity == 0) {
        return;
    }
    require(buffer != nullptr, "buffer is null");
    if (capacity < text.size() + 1) {
        throw qpinn::InvalidArgument("buffer too small: need " + std::to_string(text.size() + 1) + " bytes");
    }
    std::memcpy(buffer, text.c_str(), text.size() + 1);
}

qpinn_error_report to_c(const qpinn::ErrorReport &r) {
    return {r.max_abs_error, r.mean_abs_error, r.l2_error, r.eval_points};
}

}  // namespace

extern "C" {

const char *qpinn_version(void) { return "0.1.0"; }

const char *qpinn_status_string(qpinn_status status) {
    switch (status) {
        case QPINN_OK:
            return "ok";
        case QPINN_ERROR_INVALID_ARGUMENT:
            return "invalid argument";
        case QPINN_ERROR_IO:
            return "i/o error";
        case QPINN_ERROR_DIVERGED:
            return "training diverged";
        case QPINN_ERROR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

const char *qpinn_last_error(void) { return g_last_error.c_str(); }

qpinn_status qpinn_config_create(qpinn_config **out) {
    return guarded([&] {
        require(out != nullptr, "output handle pointer is null");
        *out = new qpinn_config{};
    });
}

void qpinn_config_destroy(qpinn_config *config) { delete config; }

size_t qpinn_config_key_count(void) { return qpinn::kSettingKeys.size(); }

const char *qpinn_config_key(size_t index) {
    // Each key is a string literal, so data() is NUL-terminated.
    return index < qpinn::kSettingKeys.size() ? qpinn::kSettingKeys[index].data() : nullptr;
}

qpinn_status qpinn_config_set(qpinn_config *config, const char *key, const char *value) {
    return guarded([&] {
        require(config != nullptr, "config handle is null");
        require(key != nullptr && value != nullptr, "key and value must not be null");
        qpinn::apply_setting(config->run, key, value);
    });
}

qpinn_status qpinn_config_get(const qpinn_config *config, const char *key, char *buffer, size_t capacity,
                              size_t *required) {
    return guarded([&] {
        require(config != nullptr, "config handle is null");
        require(key != nullptr, "key must not be null");
        copy_out(qpinn::get_setting(config->run, key), buffer, capacity, required);
    });
}

qpinn_status qpinn_config_load_file(qpinn_config *config, const char *path) {
    return guarded([&] {
        require(config != nullptr, "config handle is null");
        require(path != nullptr, "path must not be null");
        qpinn::load_config_file(config->run, path);
    });
}

qpinn_status qpinn_config_validate(const qpinn_config *config) {
    return guarded([&] {
        require(config != nullptr, "config handle is null");
        config->run.validate();
    });
}

qpinn_status qpinn_config_to_json(const qpinn_config *config, char *buffer, size_t capacity, size_t *required) {
    return guarded([&] {
        require(config != nullptr, "config handle is null");
        copy_out(qpinn::config_to_json(config->run), buffer, capacity, required);
    });
}

qpinn_status qpinn_run_experiment(const qpinn_config *config, qpinn_run_summary *summary) {
    return guarded([&] {
        require(config != nullptr, "config handle is null");
        const qpinn::RunSummary s = qpinn::run_experiment(config->run);
        if (summary) {
            *summary = {s.initial_loss, s.final_loss, to_c(s.errors), s.wall_time};
        }
    });
}

qpinn_status qpinn_train(const qpinn_config *config, qpinn_model **out) {
    return guarded([&] {
        require(config != nullptr, "config handle is null");
        require(out != nullptr, "output handle pointer is null");
        *out = nullptr;
        auto *model = new qpinn_model{qpinn::train(config->run.train), config->run.train.derivative_mode};
        *out = model;
    });
}

void qpinn_model_destroy(qpinn_model *model) { delete model; }

qpinn_status qpinn_model_predict(const qpinn_model *model, double x, double *y, double *dy_dx) {
    return guarded([&] {
        require(model != nullptr, "model handle is null");
        const auto v = qpinn::ansatz(model->report.final_params,
                                     qpinn::make_input(x, model->report.features.scaling, model->mode));
        if (y) *y = v.y;
        if (dy_dx) *dy_dx = v.dy_dx;
    });
}

qpinn_status qpinn_model_loss_history(const qpinn_model *model, double *out, size_t capacity, size_t *count) {
    return guarded([&] {
        require(model != nullptr, "model handle is null");
        const auto &h = model->report.loss_history;
        if (count) *count = h.size();
        require(out != nullptr || capacity == 0, "output buffer is null");
        std::copy_n(h.begin(), std::min(capacity, h.size()), out);
    });
}

qpinn_status qpinn_model_compare(const qpinn_model *model, size_t n_eval, qpinn_error_report *out) {
    return guarded([&] {
        require(model != nullptr, "model handle is null");
        require(out != nullptr, "output report is null");
        *out = to_c(qpinn::compare(model->report.final_params, model->report.features.scaling, n_eval));
    });
}

qpinn_status qpinn_model_save_checkpoint(const qpinn_model *model, const char *path) {
    return guarded([&] {
        require(model != nullptr, "model handle is null");
        require(path != nullptr, "path must not be null");
        qpinn::write_text_file(path, qpinn::checkpoint_json(model->report.final_params));
    });
}

qpinn_status qpinn_circuit_probabilities(double t, double out[4]) {
    return guarded([&] {
        require(out != nullptr, "output array is null");
        const auto p = qpinn::qsim::born_probabilities(qpinn::qsim::circuit_state(t));
        std::copy(p.p.begin(), p.p.end(), out);
    });
}

qpinn_status qpinn_quantum_features(double t, uint64_t shots, uint64_t seed, double out[4]) {
    return guarded([&] {
        require(out != nullptr, "output array is null");
        const auto p = qpinn::quantum_features(t, shots, seed);
        std::copy(p.p.begin(), p.p.end(), out);
    });
}

qpinn_status qpinn_sample_counts(const double probabilities[4], uint64_t shots, uint64_t seed, uint64_t out[4]) {
    return guarded([&] {
        require(probabilities != nullptr && out != nullptr, "probability and output arrays must not be null");
        qpinn::qsim::ProbVector p;
        std::copy_n(probabilities, 4, p.p.begin());
        const auto counts = qpinn::qsim::sample_counts(p, shots, seed);
        std::copy(counts.begin(), counts.end(), out);
    });
}

}  // extern "C"
