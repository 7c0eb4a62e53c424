//! Dense finite-alphabet probability tables and base-2 information measures.
//!
//! Everything downstream — bound expressions, channel constructions, the
//! binning simulator — is built from three value types: [`FiniteDist`] (a
//! single distribution), [`JointDist`] (a named multi-axis table), and
//! [`Channel`] (a conditional table). Tables are dense and row-major with the
//! last axis fastest; alphabet products are small enough in every supported
//! instance that sparsity would be pure complexity.
//!
//! All entropies and mutual informations are in bits. `0·log 0 := 0`, and
//! probabilities below [`ZERO_PROB`](crate::tol::ZERO_PROB) are treated as
//! exact zeros inside log terms.

use serde::{Deserialize, Serialize};

use crate::tol::{Budget, FILE_ROW_TOL, MASS_TOL, MI_NEG_TOL, ZERO_PROB};
use crate::{Error, Result};

/// A named alphabet: `size` symbols indexed `0..size`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Axis {
    pub name: String,
    pub size: usize,
}

impl Axis {
    pub fn new(name: impl Into<String>, size: usize) -> Self {
        Axis {
            name: name.into(),
            size,
        }
    }
}

fn total_size(axes: &[Axis]) -> usize {
    axes.iter().map(|a| a.size).product()
}

/// Row-major strides, last axis fastest.
fn strides(axes: &[Axis]) -> Vec<usize> {
    let mut s = vec![1usize; axes.len()];
    for i in (0..axes.len().saturating_sub(1)).rev() {
        s[i] = s[i + 1] * axes[i + 1].size;
    }
    s
}

fn check_axes(axes: &[Axis]) -> Result<()> {
    for a in axes {
        if a.size == 0 {
            return Err(Error::validation(format!("axis '{}' has size 0", a.name)));
        }
    }
    for i in 0..axes.len() {
        for j in i + 1..axes.len() {
            if axes[i].name == axes[j].name {
                return Err(Error::validation(format!(
                    "duplicate axis name '{}'",
                    axes[i].name
                )));
            }
        }
    }
    Ok(())
}

fn check_mass(p: &[f64], what: &str) -> Result<()> {
    let mut sum = 0.0;
    for &v in p {
        if !v.is_finite() || v < 0.0 {
            return Err(Error::validation(format!("{what}: entry {v} is negative or non-finite")));
        }
        sum += v;
    }
    if (sum - 1.0).abs() > MASS_TOL {
        return Err(Error::validation(format!("{what}: mass {sum} is not 1 within {MASS_TOL:e}")));
    }
    Ok(())
}

/// Shannon entropy of a probability slice, in bits.
fn entropy_slice(p: &[f64]) -> f64 {
    let mut h = 0.0;
    for &v in p {
        if v > ZERO_PROB {
            h -= v * v.log2();
        }
    }
    h
}

/// A probability distribution over a single unnamed alphabet.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FiniteDist {
    probs: Vec<f64>,
}

impl FiniteDist {
    /// Validates nonnegativity and unit mass (within `1e-12`); never rescales.
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::validation("distribution over empty alphabet"));
        }
        check_mass(&probs, "FiniteDist")?;
        Ok(FiniteDist { probs })
    }

    pub fn uniform(k: usize) -> Self {
        FiniteDist {
            probs: vec![1.0 / k as f64; k.max(1)],
        }
    }

    pub fn point_mass(k: usize, at: usize) -> Result<Self> {
        if at >= k {
            return Err(Error::validation(format!("point mass at {at} outside alphabet of size {k}")));
        }
        let mut probs = vec![0.0; k];
        probs[at] = 1.0;
        Ok(FiniteDist { probs })
    }

    /// Binary distribution with `P(1) = p`.
    pub fn bernoulli(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::domain(format!("Bernoulli parameter {p} outside [0,1]")));
        }
        Ok(FiniteDist {
            probs: vec![1.0 - p, p],
        })
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }
}

/// Entropy `H(d)` in bits; lies in `[0, log₂ k]`.
pub fn entropy(d: &FiniteDist) -> f64 {
    entropy_slice(d.probs())
}

/// Binary entropy `h(p) = −p log₂ p − (1−p) log₂(1−p)`.
pub fn binary_entropy(p: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::domain(format!("binary_entropy argument {p} outside [0,1]")));
    }
    let mut h = 0.0;
    if p > ZERO_PROB {
        h -= p * p.log2();
    }
    let q = 1.0 - p;
    if q > ZERO_PROB {
        h -= q * q.log2();
    }
    Ok(h)
}

/// A joint distribution over named axes, stored as a dense row-major table
/// (last axis fastest). A zero-axis joint is the scalar `1`.
#[derive(Debug, Clone, PartialEq)]
pub struct JointDist {
    axes: Vec<Axis>,
    probs: Vec<f64>,
}

impl JointDist {
    pub fn new(axes: Vec<Axis>, probs: Vec<f64>) -> Result<Self> {
        check_axes(&axes)?;
        if probs.len() != total_size(&axes) {
            return Err(Error::validation(format!(
                "joint table has {} cells but axes imply {}",
                probs.len(),
                total_size(&axes)
            )));
        }
        check_mass(&probs, "JointDist")?;
        Ok(JointDist { axes, probs })
    }

    /// Wraps a single distribution as a one-axis joint.
    pub fn from_dist(name: impl Into<String>, d: &FiniteDist) -> Self {
        JointDist {
            axes: vec![Axis::new(name, d.len())],
            probs: d.probs().to_vec(),
        }
    }

    pub fn axes(&self) -> &[Axis] {
        &self.axes
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn axis_pos(&self, name: &str) -> Option<usize> {
        self.axes.iter().position(|a| a.name == name)
    }

    fn positions(&self, names: &[&str], what: &str) -> Result<Vec<usize>> {
        let mut out = Vec::with_capacity(names.len());
        for &n in names {
            match self.axis_pos(n) {
                Some(i) => {
                    if out.contains(&i) {
                        return Err(Error::validation(format!("{what}: axis '{n}' listed twice")));
                    }
                    out.push(i);
                }
                None => return Err(Error::validation(format!("{what}: unknown axis '{n}'"))),
            }
        }
        Ok(out)
    }

    /// Sums out every axis not in `keep`. Kept axes stay in this joint's
    /// axis order regardless of the order of `keep`, so keeping all axes is
    /// the identity.
    pub fn marginalize(&self, keep: &[&str]) -> Result<JointDist> {
        let keep_pos = self.positions(keep, "marginalize")?;
        let kept: Vec<bool> = (0..self.axes.len())
            .map(|i| keep_pos.contains(&i))
            .collect();
        let out_axes: Vec<Axis> = self
            .axes
            .iter()
            .enumerate()
            .filter(|(i, _)| kept[*i])
            .map(|(_, a)| a.clone())
            .collect();
        let out_strides = strides(&out_axes);
        let out_total = total_size(&out_axes);

        // For each original axis, the stride it contributes to the output
        // index (0 for summed-out axes).
        let mut contrib = vec![0usize; self.axes.len()];
        let mut k = 0;
        for i in 0..self.axes.len() {
            if kept[i] {
                contrib[i] = out_strides[k];
                k += 1;
            }
        }

        let in_strides = strides(&self.axes);
        let mut out = vec![0.0; out_total];
        for (idx, &p) in self.probs.iter().enumerate() {
            let mut o = 0;
            for i in 0..self.axes.len() {
                let coord = (idx / in_strides[i]) % self.axes[i].size;
                o += coord * contrib[i];
            }
            out[o] += p;
        }
        Ok(JointDist {
            axes: out_axes,
            probs: out,
        })
    }

    /// Marginal over a single axis, as a plain distribution.
    pub fn marginal_dist(&self, name: &str) -> Result<FiniteDist> {
        let m = self.marginalize(&[name])?;
        Ok(FiniteDist { probs: m.probs })
    }

    /// Entropy of the whole table, in bits.
    pub fn joint_entropy(&self) -> f64 {
        entropy_slice(&self.probs)
    }

    /// Entropy of the marginal over `vars`, in bits. `H(∅) = 0`.
    pub fn entropy_of(&self, vars: &[&str]) -> Result<f64> {
        Ok(self.marginalize(vars)?.joint_entropy())
    }

    /// Conditional mutual information `I(A;B|C)` in bits, computed as
    /// `H(A,C) + H(B,C) − H(A,B,C) − H(C)`. The sets must be pairwise
    /// disjoint. Tiny negative rounding residues (within `1e-10`) are
    /// clamped to zero.
    pub fn mutual_information(&self, a: &[&str], b: &[&str], given: &[&str]) -> Result<f64> {
        let pa = self.positions(a, "mutual_information")?;
        let pb = self.positions(b, "mutual_information")?;
        let pc = self.positions(given, "mutual_information")?;
        for &i in &pa {
            if pb.contains(&i) || pc.contains(&i) {
                return Err(Error::validation(format!(
                    "mutual_information: axis '{}' appears in two sets",
                    self.axes[i].name
                )));
            }
        }
        for &i in &pb {
            if pc.contains(&i) {
                return Err(Error::validation(format!(
                    "mutual_information: axis '{}' appears in two sets",
                    self.axes[i].name
                )));
            }
        }

        let union = |xs: &[&str], ys: &[&str]| -> Vec<&str> {
            let mut v: Vec<&str> = xs.to_vec();
            v.extend_from_slice(ys);
            v
        };
        let h_ac = self.entropy_of(&union(a, given))?;
        let h_bc = self.entropy_of(&union(b, given))?;
        let h_abc = self.entropy_of(&union(&union(a, b), given))?;
        let h_c = self.entropy_of(given)?;
        let i = h_ac + h_bc - h_abc - h_c;
        debug_assert!(
            i >= -MI_NEG_TOL,
            "mutual information {i} below clamping tolerance"
        );
        Ok(if i < 0.0 { 0.0 } else { i })
    }

    /// Extends this joint through a channel: the result ranges over
    /// `self.axes ++ ch.outputs` with `P(all, out) = P(all) · ch(out | proj)`,
    /// where `proj` picks the channel's input axes out of this joint. The
    /// marginal over the original axes is unchanged.
    pub fn compose(&self, ch: &Channel) -> Result<JointDist> {
        let mut in_pos = Vec::with_capacity(ch.inputs.len());
        for ax in &ch.inputs {
            match self.axis_pos(&ax.name) {
                Some(i) => {
                    if self.axes[i].size != ax.size {
                        return Err(Error::validation(format!(
                            "compose: axis '{}' has size {} in the joint but {} in the channel",
                            ax.name, self.axes[i].size, ax.size
                        )));
                    }
                    in_pos.push(i);
                }
                None => {
                    return Err(Error::validation(format!(
                        "compose: channel input axis '{}' missing from joint",
                        ax.name
                    )))
                }
            }
        }
        for ax in &ch.outputs {
            if self.axis_pos(&ax.name).is_some() {
                return Err(Error::validation(format!(
                    "compose: output axis '{}' already present in joint",
                    ax.name
                )));
            }
        }

        let self_strides = strides(&self.axes);
        let ch_in_strides = strides(&ch.inputs);
        let out_total = total_size(&ch.outputs);
        let mut axes = self.axes.clone();
        axes.extend(ch.outputs.iter().cloned());
        let mut probs = vec![0.0; self.probs.len() * out_total];
        for (idx, &p) in self.probs.iter().enumerate() {
            let mut row = 0;
            for (k, &i) in in_pos.iter().enumerate() {
                let coord = (idx / self_strides[i]) % self.axes[i].size;
                row += coord * ch_in_strides[k];
            }
            let row_slice = ch.row(row);
            let base = idx * out_total;
            for (o, &q) in row_slice.iter().enumerate() {
                probs[base + o] = p * q;
            }
        }
        Ok(JointDist { axes, probs })
    }
}

/// A memoryless conditional table `P(outputs | inputs)`: one distribution
/// over the flattened output tuple per flattened input tuple.
#[derive(Debug, Clone, PartialEq)]
pub struct Channel {
    inputs: Vec<Axis>,
    outputs: Vec<Axis>,
    /// `in_total × out_total` entries, row-major by input tuple.
    probs: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct ChannelJson {
    inputs: Vec<Axis>,
    outputs: Vec<Axis>,
    rows: Vec<Vec<f64>>,
}

impl Channel {
    /// Validates every row at the strict construction tolerance (`1e-12`).
    pub fn new(inputs: Vec<Axis>, outputs: Vec<Axis>, probs: Vec<f64>) -> Result<Self> {
        check_axes(&inputs)?;
        check_axes(&outputs)?;
        for ai in &inputs {
            if outputs.iter().any(|ao| ao.name == ai.name) {
                return Err(Error::validation(format!(
                    "axis '{}' is both an input and an output",
                    ai.name
                )));
            }
        }
        let (it, ot) = (total_size(&inputs), total_size(&outputs));
        if probs.len() != it * ot {
            return Err(Error::validation(format!(
                "channel table has {} cells but axes imply {}",
                probs.len(),
                it * ot
            )));
        }
        for r in 0..it {
            check_mass(&probs[r * ot..(r + 1) * ot], &format!("channel row {r}"))?;
        }
        Ok(Channel {
            inputs,
            outputs,
            probs,
        })
    }

    pub fn from_rows(inputs: Vec<Axis>, outputs: Vec<Axis>, rows: Vec<Vec<f64>>) -> Result<Self> {
        let probs: Vec<f64> = rows.into_iter().flatten().collect();
        Channel::new(inputs, outputs, probs)
    }

    /// Binary symmetric channel with crossover `p`, axes named `x` and `y`.
    pub fn bsc(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::domain(format!("BSC crossover {p} outside [0,1]")));
        }
        Channel::from_rows(
            vec![Axis::new("x", 2)],
            vec![Axis::new("y", 2)],
            vec![vec![1.0 - p, p], vec![p, 1.0 - p]],
        )
    }

    /// Noiseless `k`-ary identity channel.
    pub fn noiseless(input: impl Into<String>, output: impl Into<String>, k: usize) -> Result<Self> {
        let mut probs = vec![0.0; k * k];
        for i in 0..k {
            probs[i * k + i] = 1.0;
        }
        Channel::new(vec![Axis::new(input, k)], vec![Axis::new(output, k)], probs)
    }

    /// Same table under new axis names.
    pub fn with_names(&self, inputs: &[&str], outputs: &[&str]) -> Result<Self> {
        if inputs.len() != self.inputs.len() || outputs.len() != self.outputs.len() {
            return Err(Error::validation("with_names: wrong number of axis names"));
        }
        let ren = |axes: &[Axis], names: &[&str]| {
            axes.iter()
                .zip(names)
                .map(|(a, n)| Axis::new(*n, a.size))
                .collect()
        };
        Channel::new(
            ren(&self.inputs, inputs),
            ren(&self.outputs, outputs),
            self.probs.clone(),
        )
    }

    pub fn inputs(&self) -> &[Axis] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[Axis] {
        &self.outputs
    }

    pub fn in_total(&self) -> usize {
        total_size(&self.inputs)
    }

    pub fn out_total(&self) -> usize {
        total_size(&self.outputs)
    }

    pub fn row(&self, r: usize) -> &[f64] {
        let ot = self.out_total();
        &self.probs[r * ot..(r + 1) * ot]
    }

    pub fn prob(&self, r: usize, o: usize) -> f64 {
        self.probs[r * self.out_total() + o]
    }

    /// `n`-fold memoryless extension. Axes are replicated time-major with
    /// `.t` suffixes (`x.0, y.0, x.1, …` becomes `x.0, x.1, …` on each side),
    /// and the row for an input sequence is the product of per-symbol rows.
    /// Refuses (without allocating) if the extended table exceeds the cell
    /// budget.
    pub fn product_extension(&self, n: usize, budget: &Budget) -> Result<Channel> {
        if n == 0 {
            return Err(Error::validation("product_extension requires n ≥ 1"));
        }
        let (it, ot) = (self.in_total() as u128, self.out_total() as u128);
        let cells = it
            .checked_pow(n as u32)
            .and_then(|a| ot.checked_pow(n as u32).and_then(|b| a.checked_mul(b)))
            .ok_or_else(|| Error::Budget {
                what: format!("product_extension n={n}"),
                needed: u128::MAX,
                budget: budget.cells,
                unit: "cells",
            })?;
        budget.check_cells(&format!("product_extension n={n}"), cells)?;

        let suffix = |axes: &[Axis]| -> Vec<Axis> {
            (0..n)
                .flat_map(|t| {
                    axes.iter()
                        .map(move |a| Axis::new(format!("{}.{t}", a.name), a.size))
                })
                .collect()
        };
        let (it, ot) = (self.in_total(), self.out_total());
        let (itn, otn) = (it.pow(n as u32), ot.pow(n as u32));
        let mut probs = vec![0.0; itn * otn];
        let mut in_sym = vec![0usize; n];
        for ri in 0..itn {
            // Decompose time-major: symbol 0 is the most significant digit.
            let mut rest = ri;
            for t in (0..n).rev() {
                in_sym[t] = rest % it;
                rest /= it;
            }
            for o in 0..otn {
                let mut rest = o;
                let mut p = 1.0;
                for t in (0..n).rev() {
                    let os = rest % ot;
                    rest /= ot;
                    p *= self.prob(in_sym[t], os);
                }
                probs[ri * otn + o] = p;
            }
        }
        Channel::new(suffix(&self.inputs), suffix(&self.outputs), probs)
    }

    /// Parses the documented channel JSON schema:
    /// `{"inputs":[{"name":"x1","size":2},…],"outputs":[…],"rows":[[…],…]}`
    /// with rows ordered by row-major input-tuple index and columns by
    /// row-major output-tuple index. Rows whose mass is off by more than
    /// `1e-9` are rejected; accepted rows are rescaled to exact unit mass.
    pub fn from_json_str(s: &str) -> Result<Channel> {
        let raw: ChannelJson = serde_json::from_str(s)?;
        check_axes(&raw.inputs)?;
        check_axes(&raw.outputs)?;
        let (it, ot) = (total_size(&raw.inputs), total_size(&raw.outputs));
        if raw.rows.len() != it {
            return Err(Error::validation(format!(
                "channel file has {} rows but inputs imply {it}",
                raw.rows.len()
            )));
        }
        let mut probs = Vec::with_capacity(it * ot);
        for (r, row) in raw.rows.iter().enumerate() {
            if row.len() != ot {
                return Err(Error::validation(format!(
                    "channel file row {r} has {} entries but outputs imply {ot}",
                    row.len()
                )));
            }
            let mut mass = 0.0;
            for &v in row {
                if !v.is_finite() || v < 0.0 {
                    return Err(Error::validation(format!(
                        "channel file row {r}: entry {v} is negative or non-finite"
                    )));
                }
                mass += v;
            }
            if (mass - 1.0).abs() > FILE_ROW_TOL {
                return Err(Error::validation(format!(
                    "channel file row {r}: mass {mass} is off by more than {FILE_ROW_TOL:e}"
                )));
            }
            probs.extend(row.iter().map(|&v| v / mass));
        }
        Channel::new(raw.inputs, raw.outputs, probs)
    }

    pub fn to_json_string(&self) -> String {
        let ot = self.out_total();
        let rows: Vec<Vec<f64>> = (0..self.in_total())
            .map(|r| self.probs[r * ot..(r + 1) * ot].to_vec())
            .collect();
        let doc = ChannelJson {
            inputs: self.inputs.clone(),
            outputs: self.outputs.clone(),
            rows,
        };
        serde_json::to_string_pretty(&doc).expect("channel serialization cannot fail")
    }
}
