#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "enercast/error.hpp"
#include "enercast/random.hpp"

namespace enercast {

enum class Activation { sigmoid, tanh, linear };

inline std::string_view to_string(Activation a) {
    switch (a) {
        case Activation::sigmoid: return "sigmoid";
        case Activation::tanh: return "tanh";
        case Activation::linear: return "linear";
    }
    return "?";
}

inline Activation parse_activation(std::string_view s) {
    if (s == "sigmoid") return Activation::sigmoid;
    if (s == "tanh") return Activation::tanh;
    if (s == "linear") return Activation::linear;
    throw ConfigError("unknown activation '" + std::string(s) + "'");
}

inline double activate(Activation a, double x) {
    switch (a) {
        case Activation::sigmoid: return 1.0 / (1.0 + std::exp(-x));
        case Activation::tanh: return std::tanh(x);
        case Activation::linear: return x;
    }
    return x;
}

/// Derivative expressed through the activation's output value.
inline double activate_derivative(Activation a, double out) {
    switch (a) {
        case Activation::sigmoid: return out * (1.0 - out);
        case Activation::tanh: return 1.0 - out * out;
        case Activation::linear: return 1.0;
    }
    return 1.0;
}

struct NetworkConfig {
    std::vector<std::size_t> layer_sizes{18, 10, 1};  // input, hidden..., output
    Activation hidden_activation = Activation::sigmoid;
    Activation output_activation = Activation::linear;
    std::uint64_t init_seed = 1;
    double init_scale = 1.0;

    friend bool operator==(const NetworkConfig&, const NetworkConfig&) = default;
};

inline void validate(const NetworkConfig& cfg) {
    if (cfg.layer_sizes.size() < 2) throw ConfigError("network needs at least 2 layers");
    for (auto n : cfg.layer_sizes)
        if (n < 1) throw ConfigError("every layer needs at least one unit");
    if (cfg.layer_sizes.back() != 1) throw ConfigError("output layer must have exactly 1 unit");
    if (cfg.hidden_activation == Activation::linear)
        throw ConfigError("hidden activation must be sigmoid or tanh");
    if (cfg.output_activation == Activation::tanh)
        throw ConfigError("output activation must be linear or sigmoid");
    if (!(cfg.init_scale > 0.0) || !std::isfinite(cfg.init_scale))
        throw ConfigError("init_scale must be a positive finite number");
}

/// Dense layer: weights are row-major, fan_out rows by fan_in columns.
struct Layer {
    std::size_t fan_in = 0;
    std::size_t fan_out = 0;
    std::vector<double> weights;
    std::vector<double> bias;

    Layer() = default;
    Layer(std::size_t in, std::size_t out)
        : fan_in(in), fan_out(out), weights(in * out, 0.0), bias(out, 0.0) {}

    double& w(std::size_t row, std::size_t col) { return weights[row * fan_in + col]; }
    double w(std::size_t row, std::size_t col) const { return weights[row * fan_in + col]; }

    friend bool operator==(const Layer&, const Layer&) = default;
};

/// Parameter-shaped container; holds gradients as well as weights.
struct Parameters {
    std::vector<Layer> layers;

    std::size_t size() const {
        std::size_t n = 0;
        for (const auto& l : layers) n += l.weights.size() + l.bias.size();
        return n;
    }

    /// Flat view: layer by layer, weights (row-major) then biases.
    double& operator[](std::size_t i) {
        for (auto& l : layers) {
            if (i < l.weights.size()) return l.weights[i];
            i -= l.weights.size();
            if (i < l.bias.size()) return l.bias[i];
            i -= l.bias.size();
        }
        throw ShapeError("parameter index out of range");
    }
    double operator[](std::size_t i) const { return const_cast<Parameters&>(*this)[i]; }

    friend bool operator==(const Parameters&, const Parameters&) = default;
};

inline Parameters zeros_like(const Parameters& p) {
    Parameters out;
    out.layers.reserve(p.layers.size());
    for (const auto& l : p.layers) out.layers.emplace_back(l.fan_in, l.fan_out);
    return out;
}

struct Network {
    NetworkConfig config;
    Parameters params;

    std::size_t input_size() const { return config.layer_sizes.front(); }

    friend bool operator==(const Network&, const Network&) = default;
};

/// Seeded uniform weights on +-init_scale/sqrt(fan_in); zero biases.
inline Network init_network(const NetworkConfig& cfg) {
    validate(cfg);
    Network net{cfg, {}};
    Rng rng(cfg.init_seed);
    for (std::size_t i = 0; i + 1 < cfg.layer_sizes.size(); ++i) {
        Layer layer(cfg.layer_sizes[i], cfg.layer_sizes[i + 1]);
        const double bound = cfg.init_scale / std::sqrt(static_cast<double>(layer.fan_in));
        for (auto& w : layer.weights) w = rng.uniform(-bound, bound);
        net.params.layers.push_back(std::move(layer));
    }
    return net;
}

struct ForwardPass {
    double output = 0.0;
    /// activations[0] is the input; activations[i + 1] is layer i's output.
    std::vector<std::vector<double>> activations;
};

inline ForwardPass forward(const Network& net, std::span<const double> x) {
    if (x.size() != net.input_size())
        throw ShapeError("input has " + std::to_string(x.size()) + " features, network expects " +
                         std::to_string(net.input_size()));
    ForwardPass pass;
    const auto& layers = net.params.layers;
    pass.activations.reserve(layers.size() + 1);
    pass.activations.emplace_back(x.begin(), x.end());
    for (std::size_t li = 0; li < layers.size(); ++li) {
        const auto& layer = layers[li];
        const auto& in = pass.activations.back();
        const Activation act = li + 1 == layers.size() ? net.config.output_activation
                                                       : net.config.hidden_activation;
        std::vector<double> out(layer.fan_out);
        for (std::size_t r = 0; r < layer.fan_out; ++r) {
            double z = layer.bias[r];
            const double* row = layer.weights.data() + r * layer.fan_in;
            for (std::size_t c = 0; c < layer.fan_in; ++c) z += row[c] * in[c];
            out[r] = activate(act, z);
        }
        pass.activations.push_back(std::move(out));
    }
    pass.output = pass.activations.back().front();
    return pass;
}

inline double predict(const Network& net, std::span<const double> x) {
    return forward(net, x).output;
}

/// Per-sample loss (y - yhat)^2, no 1/2 factor.
inline double sample_loss(const Network& net, std::span<const double> x, double y) {
    const double e = y - predict(net, x);
    return e * e;
}

/// Reverse-mode gradients of (y - yhat)^2 with respect to every parameter.
inline Parameters compute_gradients(const Network& net, std::span<const double> x, double y) {
    const ForwardPass pass = forward(net, x);
    const auto& layers = net.params.layers;
    Parameters grad = zeros_like(net.params);

    const double yhat = pass.output;
    std::vector<double> delta{-2.0 * (y - yhat) *
                              activate_derivative(net.config.output_activation, yhat)};
    for (std::size_t li = layers.size(); li-- > 0;) {
        const auto& layer = layers[li];
        const auto& in = pass.activations[li];
        auto& g = grad.layers[li];
        for (std::size_t r = 0; r < layer.fan_out; ++r) {
            g.bias[r] = delta[r];
            for (std::size_t c = 0; c < layer.fan_in; ++c) g.w(r, c) = delta[r] * in[c];
        }
        if (li == 0) break;
        std::vector<double> prev(layer.fan_in, 0.0);
        for (std::size_t r = 0; r < layer.fan_out; ++r)
            for (std::size_t c = 0; c < layer.fan_in; ++c) prev[c] += layer.w(r, c) * delta[r];
        for (std::size_t c = 0; c < layer.fan_in; ++c)
            prev[c] *= activate_derivative(net.config.hidden_activation, in[c]);
        delta = std::move(prev);
    }
    for (const auto& l : grad.layers) {
        for (double v : l.weights)
            if (!std::isfinite(v)) throw NumericError("non-finite gradient");
        for (double v : l.bias)
            if (!std::isfinite(v)) throw NumericError("non-finite gradient");
    }
    return grad;
}

/// Central differences (L(theta + h) - L(theta - h)) / 2h, one parameter at a
/// time. Independent of compute_gradients; used to check it.
inline Parameters finite_diff_gradient(const Network& net, std::span<const double> x, double y,
                                       double step) {
    if (!(step > 0.0)) throw ConfigError("finite-difference step must be positive");
    Network probe = net;
    Parameters grad = zeros_like(net.params);
    for (std::size_t i = 0; i < probe.params.size(); ++i) {
        const double orig = probe.params[i];
        probe.params[i] = orig + step;
        const double up = sample_loss(probe, x, y);
        probe.params[i] = orig - step;
        const double down = sample_loss(probe, x, y);
        probe.params[i] = orig;
        grad[i] = (up - down) / (2.0 * step);
    }
    return grad;
}

}  // namespace enercast
