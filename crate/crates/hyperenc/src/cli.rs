//! Command-line frontend: `encode`, `hash`, `divisor`, `invariants` and
//! `census` subcommands with stable JSON output.
//!
//! Exit codes: 0 success, 1 usage or validation failure, 2 not-encodable
//! input (including hash retry exhaustion and empty divisors), 3 census
//! assertion failure.

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::census::{image_census, verify_family, CensusError, VerifyOptions};
use crate::curves::{igusa_locus_residual, CurvePoint, CurveSpec, CurveSpecDoc, DParam, Family};
use crate::encoders::{encode, EncodeError};
use crate::ffield::ElementBuilder;
use crate::hashing::{derive_seeds, hash_to_point, DigestAlg, HashError};
use crate::jacobian::{encode_smooth_divisor, DivisorError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NOT_ENCODABLE: i32 = 2;
pub const EXIT_ASSERTION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "hyperenc",
    version,
    about = "Deterministic point encodings on Hessian and hyperelliptic curves",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Encode a field element t to a point.
    Encode {
        #[command(flatten)]
        curve: CurveArgs,
        /// The input t, canonical hex.
        #[arg(long)]
        t: String,
    },
    /// Hash a message to a point (digest-then-encode with retry counter).
    Hash {
        #[command(flatten)]
        curve: CurveArgs,
        #[command(flatten)]
        message: MessageArgs,
    },
    /// Hash a message to a 1-smooth reduced divisor on the Jacobian.
    Divisor {
        #[command(flatten)]
        curve: CurveArgs,
        #[command(flatten)]
        message: MessageArgs,
        /// Number of points to aim for (default: the curve genus).
        #[arg(long)]
        g: Option<u64>,
    },
    /// Print the curve's invariants (j-invariant or Igusa tuple).
    Invariants {
        #[command(flatten)]
        curve: CurveArgs,
    },
    /// Exhaustive image census / theorem verification over small fields.
    Census {
        #[command(flatten)]
        curve: CurveArgs,
        /// Comma-separated field sizes (overrides --q).
        #[arg(long, value_delimiter = ',')]
        qs: Vec<String>,
        /// Random parameter sets per field for the sampled families.
        #[arg(long, default_value_t = 25)]
        trials: u32,
        /// PRNG seed for parameter sampling.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Worker threads for the t-range partition.
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Write the JSON to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Embed the full image (pinned-curve censuses only).
        #[arg(long)]
        include_image: bool,
    },
}

#[derive(Debug, Args)]
struct CurveArgs {
    /// Path to a curve-spec JSON document.
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Curve family (hessian, genus2type1, genus2type2, quasiquadratic, demoivre).
    #[arg(long)]
    family: Option<String>,
    /// Field modulus, decimal.
    #[arg(long)]
    q: Option<String>,
    /// Hessian curve parameter (hex) or polynomial degree (integer).
    #[arg(long)]
    d: Option<String>,
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    mu: Option<String>,
    #[arg(long)]
    a: Option<String>,
    #[arg(long)]
    b: Option<String>,
    #[arg(long)]
    v: Option<String>,
    #[arg(long)]
    w: Option<String>,
}

#[derive(Debug, Args)]
struct MessageArgs {
    /// Message bytes; "-" reads raw bytes from stdin.
    #[arg(long)]
    message: String,
    /// Digest algorithm: sha256 or sha512.
    #[arg(long, default_value = "sha256")]
    digest: String,
}

pub struct CliOutput {
    pub stdout: String,
    pub exit_code: i32,
}

fn output(value: &Value, code: i32) -> CliOutput {
    CliOutput {
        stdout: serde_json::to_string(value).expect("json"),
        exit_code: code,
    }
}

fn usage_error(detail: impl std::fmt::Display) -> CliOutput {
    output(
        &json!({"error": "validation", "detail": detail.to_string()}),
        EXIT_USAGE,
    )
}

struct ParamError(String);

impl CurveArgs {
    /// Assembles a curve-spec document from --spec or inline flags.
    fn doc(&self) -> Result<CurveSpecDoc, ParamError> {
        if let Some(path) = &self.spec {
            let text = std::fs::read_to_string(path)
                .map_err(|e| ParamError(format!("cannot read {}: {e}", path.display())))?;
            return CurveSpecDoc::parse_json(&text).map_err(|e| ParamError(e.to_string()));
        }
        let family = self
            .family
            .as_deref()
            .ok_or_else(|| ParamError("--family or --spec required".into()))?;
        let fam = Family::parse(family)
            .ok_or_else(|| ParamError(format!("unknown family {family:?}")))?;
        let q = self
            .q
            .as_ref()
            .ok_or_else(|| ParamError("--q required".into()))?
            .clone();
        let d = match (&self.d, fam) {
            (None, _) => None,
            (Some(s), Family::Hessian) => Some(DParam::Element(s.clone())),
            (Some(s), Family::QuasiQuadratic | Family::DeMoivre) => {
                Some(DParam::Degree(s.parse().map_err(|_| {
                    ParamError("--d must be an integer degree".into())
                })?))
            }
            (Some(_), _) => return Err(ParamError(format!("--d is not a {fam} parameter"))),
        };
        Ok(CurveSpecDoc {
            family: family.to_string(),
            q,
            d,
            lambda: self.lambda.clone(),
            mu: self.mu.clone(),
            a: self.a.clone(),
            b: self.b.clone(),
            v: self.v.clone(),
            w: self.w.clone(),
        })
    }

    fn build(&self) -> Result<CurveSpec, ParamError> {
        self.doc()?.build().map_err(|e| ParamError(e.to_string()))
    }

    /// Whether the census should sweep parameters (nothing pinned beyond a
    /// degree) or run the single pinned curve.
    fn is_pinned(&self, fam: Family) -> Result<bool, ParamError> {
        let have = |o: &Option<String>| o.is_some();
        let pins = [
            have(&self.lambda),
            have(&self.mu),
            have(&self.a),
            have(&self.b),
            have(&self.v),
            have(&self.w),
        ];
        let needed: &[bool] = match fam {
            Family::Hessian => return Ok(self.d.is_some()),
            Family::Genus2Type1 => &[false, false, true, true, false, false],
            Family::Genus2Type2 => &[true, true, true, false, true, true],
            Family::QuasiQuadratic => &[false, false, true, false, false, false],
            Family::DeMoivre => &[false, false, true, true, false, false],
        };
        if pins == *needed {
            Ok(true)
        } else if pins.iter().all(|p| !p) {
            Ok(false)
        } else {
            Err(ParamError(
                "pin all family parameters for a single census, or none for a sweep".into(),
            ))
        }
    }
}

fn point_json(p: &CurvePoint) -> Value {
    match p.coords() {
        Some((x, y)) => json!({"x": x.to_hex(), "y": y.to_hex()}),
        None => json!({"infinity": true}),
    }
}

/// Runs the CLI; `stdin` supplies the message bytes when `--message -`.
pub fn run<I, S>(args: I, stdin: Option<&[u8]>) -> CliOutput
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            return CliOutput {
                stdout: e.to_string(),
                exit_code: EXIT_USAGE,
            }
        }
        Err(e) => {
            // --help / --version
            return CliOutput {
                stdout: e.to_string(),
                exit_code: EXIT_OK,
            };
        }
    };
    match cli.cmd {
        Cmd::Encode { curve, t } => cmd_encode(&curve, &t),
        Cmd::Hash { curve, message } => cmd_hash(&curve, &message, stdin),
        Cmd::Divisor { curve, message, g } => cmd_divisor(&curve, &message, g, stdin),
        Cmd::Invariants { curve } => cmd_invariants(&curve),
        Cmd::Census {
            curve,
            qs,
            trials,
            seed,
            workers,
            out,
            include_image,
        } => cmd_census(&curve, &qs, trials, seed, workers, out, include_image),
    }
}

fn cmd_encode(curve: &CurveArgs, t_hex: &str) -> CliOutput {
    let spec = match curve.build() {
        Ok(s) => s,
        Err(e) => return usage_error(e.0),
    };
    let t = match spec.ctx().from_hex(t_hex) {
        Ok(t) => t,
        Err(e) => return usage_error(format!("--t: {e}")),
    };
    match encode(&spec, &t) {
        Ok(p) => output(&point_json(&p), EXIT_OK),
        Err(EncodeError::NotEncodable { stage }) => output(
            &json!({"error": "not_encodable", "stage": stage}),
            EXIT_NOT_ENCODABLE,
        ),
        Err(e) => usage_error(e),
    }
}

fn read_message(args: &MessageArgs, stdin: Option<&[u8]>) -> Result<Vec<u8>, ParamError> {
    if args.message == "-" {
        match stdin {
            Some(bytes) => Ok(bytes.to_vec()),
            None => {
                let mut buf = Vec::new();
                std::io::stdin()
                    .read_to_end(&mut buf)
                    .map_err(|e| ParamError(format!("stdin: {e}")))?;
                Ok(buf)
            }
        }
    } else {
        Ok(args.message.clone().into_bytes())
    }
}

fn digest_alg(args: &MessageArgs) -> Result<DigestAlg, ParamError> {
    DigestAlg::parse(&args.digest)
        .ok_or_else(|| ParamError(format!("unknown digest {:?}", args.digest)))
}

fn cmd_hash(curve: &CurveArgs, message: &MessageArgs, stdin: Option<&[u8]>) -> CliOutput {
    let spec = match curve.build() {
        Ok(s) => s,
        Err(e) => return usage_error(e.0),
    };
    let (msg, alg) = match (read_message(message, stdin), digest_alg(message)) {
        (Ok(m), Ok(a)) => (m, a),
        (Err(e), _) | (_, Err(e)) => return usage_error(e.0),
    };
    match hash_to_point(&spec, &msg, alg) {
        Ok((p, counter)) => output(
            &json!({"point": point_json(&p), "counter": counter}),
            EXIT_OK,
        ),
        Err(HashError::HashFailure) => {
            output(&json!({"error": "hash_failure"}), EXIT_NOT_ENCODABLE)
        }
        Err(HashError::Encode(e)) => usage_error(e),
    }
}

fn cmd_divisor(
    curve: &CurveArgs,
    message: &MessageArgs,
    g: Option<u64>,
    stdin: Option<&[u8]>,
) -> CliOutput {
    let spec = match curve.build() {
        Ok(s) => s,
        Err(e) => return usage_error(e.0),
    };
    let Some(genus) = spec.hyperelliptic_genus() else {
        return usage_error(format!(
            "family {} has no hyperelliptic model",
            spec.family()
        ));
    };
    let g = g.unwrap_or(genus);
    let (msg, alg) = match (read_message(message, stdin), digest_alg(message)) {
        (Ok(m), Ok(a)) => (m, a),
        (Err(e), _) | (_, Err(e)) => return usage_error(e.0),
    };
    let n_seeds = (g + 4).min(255) as u8;
    let seeds = derive_seeds(spec.ctx(), &msg, alg, n_seeds);
    match encode_smooth_divisor(&spec, &seeds, g) {
        Ok(d) => {
            let points: Vec<Value> = d.points.iter().map(point_json).collect();
            output(
                &json!({"genus": d.genus, "r": d.r(), "points": points}),
                EXIT_OK,
            )
        }
        Err(DivisorError::EmptyDivisor) => {
            output(&json!({"error": "empty_divisor"}), EXIT_NOT_ENCODABLE)
        }
        Err(e) => usage_error(e),
    }
}

fn cmd_invariants(curve: &CurveArgs) -> CliOutput {
    let spec = match curve.build() {
        Ok(s) => s,
        Err(e) => return usage_error(e.0),
    };
    let doc = spec.to_doc();
    let igusa_json = |j: &crate::curves::IgusaInvariants, extra: Option<Value>| {
        let mut v = json!({
            "curve": doc,
            "J2": j.j2.to_hex(),
            "J4": j.j4.to_hex(),
            "J6": j.j6.to_hex(),
            "J8": j.j8.to_hex(),
            "J10": j.j10.to_hex(),
        });
        if let Some(Value::Object(extra)) = extra {
            v.as_object_mut().unwrap().extend(extra);
        }
        v
    };
    match &spec {
        CurveSpec::Hessian(c) => match c.j_invariant() {
            Ok(j) => output(&json!({"curve": doc, "j": j.to_hex()}), EXIT_OK),
            Err(e) => usage_error(e),
        },
        CurveSpec::Genus2Type1(c) => output(&igusa_json(&c.igusa(), None), EXIT_OK),
        CurveSpec::Genus2Type2(c) => {
            let j = c.igusa();
            let residual = igusa_locus_residual(&j);
            output(
                &igusa_json(&j, Some(json!({"locus_residual": residual.to_hex()}))),
                EXIT_OK,
            )
        }
        CurveSpec::QuasiQuadratic(_) => {
            usage_error("no invariants implemented for the quasiquadratic family")
        }
        CurveSpec::DeMoivre(c) => match c.igusa() {
            Some(j) => output(&igusa_json(&j, None), EXIT_OK),
            None => usage_error("Igusa invariants are implemented for d = 5 only"),
        },
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_census(
    curve: &CurveArgs,
    qs: &[String],
    trials: u32,
    seed: u64,
    workers: usize,
    out: Option<PathBuf>,
    include_image: bool,
) -> CliOutput {
    // a spec document pins the curve; inline flags may pin or sweep
    let from_spec_file = curve.spec.is_some();
    let base_doc = if from_spec_file {
        match curve.doc() {
            Ok(d) => Some(d),
            Err(e) => return usage_error(e.0),
        }
    } else {
        None
    };
    let family_name = base_doc
        .as_ref()
        .map(|d| d.family.clone())
        .or_else(|| curve.family.clone());
    let fam = match family_name.as_deref().map(Family::parse) {
        Some(Some(f)) => f,
        Some(None) => return usage_error(format!("unknown family {family_name:?}")),
        None => return usage_error("--family or --spec required for census"),
    };
    let q_strings: Vec<String> = if !qs.is_empty() {
        qs.to_vec()
    } else if let Some(q) = &curve.q {
        vec![q.clone()]
    } else if let Some(doc) = &base_doc {
        vec![doc.q.clone()]
    } else {
        return usage_error("--q or --qs required for census");
    };
    let pinned = from_spec_file
        || match curve.is_pinned(fam) {
            Ok(p) => p,
            Err(e) => return usage_error(e.0),
        };
    let value = if pinned {
        let mut reports = Vec::new();
        for q in &q_strings {
            let mut args_doc = match &base_doc {
                Some(d) => d.clone(),
                None => match curve.doc() {
                    Ok(d) => d,
                    Err(e) => return usage_error(e.0),
                },
            };
            args_doc.q = q.clone();
            let spec = match args_doc.build() {
                Ok(s) => s,
                Err(e) => return usage_error(e),
            };
            let census = match image_census(&spec, workers) {
                Ok(c) => c,
                Err(e) => return census_error(e),
            };
            let mut entry = serde_json::to_value(&census.report).expect("report json");
            if include_image {
                let image: Vec<Value> = census
                    .image
                    .iter()
                    .map(|(p, mult)| {
                        let mut v = point_json(p);
                        v.as_object_mut()
                            .unwrap()
                            .insert("multiplicity".into(), json!(mult));
                        v
                    })
                    .collect();
                entry
                    .as_object_mut()
                    .unwrap()
                    .insert("image".into(), json!(image));
            }
            reports.push(entry);
        }
        if reports.len() == 1 {
            reports.pop().unwrap()
        } else {
            json!(reports)
        }
    } else {
        let mut q_list = Vec::new();
        for q in &q_strings {
            match q.parse::<u64>() {
                Ok(v) => q_list.push(v),
                Err(_) => {
                    // arbitrary-precision q is over the cap by definition
                    let parsed: Result<num_bigint::BigUint, _> = q.parse();
                    return match parsed {
                        Ok(big) => census_error(CensusError::FieldTooLarge {
                            q: big,
                            cap: crate::census::FIELD_CAP,
                        }),
                        Err(_) => usage_error(format!("bad field size {q:?}")),
                    };
                }
            }
        }
        let degree = match (&curve.d, fam) {
            (Some(s), Family::QuasiQuadratic | Family::DeMoivre) => match s.parse() {
                Ok(d) => Some(d),
                Err(_) => return usage_error("--d must be an integer degree"),
            },
            _ => None,
        };
        let options = VerifyOptions {
            trials,
            seed,
            degree,
            workers,
        };
        let summary = match verify_family(fam, &q_list, &options) {
            Ok(s) => s,
            Err(e) => return census_error(e),
        };
        let code = if summary.pass {
            EXIT_OK
        } else {
            EXIT_ASSERTION
        };
        let value = serde_json::to_value(&summary).expect("summary json");
        return finish(value, out, code);
    };
    finish(value, out, EXIT_OK)
}

fn census_error(e: CensusError) -> CliOutput {
    match e {
        CensusError::Assertion(f) => {
            output(&json!({"error": "assertion", "detail": f}), EXIT_ASSERTION)
        }
        other => usage_error(other),
    }
}

fn finish(value: Value, out: Option<PathBuf>, code: i32) -> CliOutput {
    let text = serde_json::to_string(&value).expect("json");
    if let Some(path) = out {
        if let Err(e) = std::fs::write(&path, text.as_bytes()) {
            return usage_error(format!("cannot write {}: {e}", path.display()));
        }
        return CliOutput {
            stdout: String::new(),
            exit_code: code,
        };
    }
    CliOutput {
        stdout: text,
        exit_code: code,
    }
}
