"""Stateless HTTP/JSON facade over the core.

Endpoints (all under /v1): clusters, scenarios, portfolio, project, sweep,
offset, score. Identical request bodies yield identical response bodies;
the only shared state is the immutable data bundle loaded at startup.
Malformed input returns 400 with field-level messages, unreachable solver
targets return 422.
"""

from __future__ import annotations

import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from typing import Optional, Tuple
from urllib.parse import parse_qs, urlparse

from . import api, report
from .loaders import DataBundle, ValidationError


def _error_body(message: str, field: str = "") -> dict:
    body = {"error": message}
    if field:
        body["field"] = field
    return body


def handle_request(bundle: DataBundle, method: str, path: str, body: Optional[dict]) -> Tuple[int, dict | str]:
    """Pure request dispatcher: (status, payload). Payload str means raw JSON text."""
    parsed = urlparse(path)
    route = parsed.path.rstrip("/")
    query = parse_qs(parsed.query)

    try:
        if method == "GET" and route == "/v1/clusters":
            return 200, {"clusters": api.cluster_matrix(bundle)}

        if method == "GET" and route == "/v1/scenarios":
            return 200, {
                "order": list(bundle.scenario_order),
                "scenarios": {name: params.as_dict()
                              for name, params in bundle.scenarios.items()},
            }

        if method == "GET" and route == "/v1/score":
            if "kwh" not in query:
                return 400, _error_body("missing query parameter", "kwh")
            try:
                kwh = float(query["kwh"][0])
            except ValueError:
                return 400, _error_body("kwh must be a number", "kwh")
            if kwh < 0:
                return 400, _error_body("kwh must be >= 0", "kwh")
            return 200, api.score_energy(kwh)

        if method == "POST" and route == "/v1/portfolio":
            spec = None if body in (None, {}) else body
            footprint = api.portfolio_footprint(bundle, spec)
            # Byte-identical with `aifootprint portfolio --format json`.
            return 200, report.render_json(report.footprint_payload(footprint))

        if method == "POST" and route == "/v1/project":
            if body is None or "scenario" not in body:
                return 400, _error_body("missing required field", "scenario")
            result = api.project_scenario(bundle, body["scenario"], body.get("portfolio"))
            return 200, result.as_dict()

        if method == "POST" and route == "/v1/sweep":
            if body is None:
                return 400, _error_body("missing JSON body")
            for name in ("parameter", "values"):
                if name not in body:
                    return 400, _error_body("missing required field", name)
            values = body["values"]
            if not isinstance(values, list) or not values:
                return 400, _error_body("values must be a non-empty list", "values")
            sweep = api.run_sweep(
                bundle, body.get("scenario", "intermediate"), str(body["parameter"]),
                [float(v) for v in values], body.get("portfolio"),
            )
            return 200, report.sweep_payload(sweep)

        if method == "POST" and route == "/v1/offset":
            if body is None or "target" not in body:
                return 400, _error_body("missing required field", "target")
            try:
                target = float(body["target"])
            except (TypeError, ValueError):
                return 400, _error_body("target must be a number in (0, 1)", "target")
            try:
                result = api.run_offset(
                    bundle, body.get("scenario", "intermediate"), target,
                    pue_override=float(body.get("pue", 1.04)),
                    grid_factor_override=float(body.get("grid_factor", 0.55)),
                    spec=body.get("portfolio"),
                )
            except ValueError as exc:
                return 422, _error_body(str(exc), "target")
            return 200, result

        return 404, _error_body(f"no such endpoint: {method} {route}")
    except ValidationError as exc:
        return 400, _error_body(str(exc), exc.field_path)
    except (TypeError, ValueError, KeyError) as exc:
        return 400, _error_body(str(exc))


def make_handler(bundle: DataBundle, ui_dir: Optional[Path] = None):
    class Handler(BaseHTTPRequestHandler):
        server_version = "aifootprint"

        def log_message(self, fmt, *args):  # quiet by default
            pass

        def _send(self, status: int, payload):
            if isinstance(payload, str):
                raw = payload.encode("utf-8")
            else:
                raw = (json.dumps(payload, sort_keys=True) + "\n").encode("utf-8")
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(raw)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")
            self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
            self.end_headers()
            self.wfile.write(raw)

        def _serve_static(self) -> bool:
            if ui_dir is None or self.path.startswith("/v1/"):
                return False
            rel = urlparse(self.path).path.lstrip("/") or "index.html"
            target = (ui_dir / rel).resolve()
            if not str(target).startswith(str(ui_dir.resolve())) or not target.is_file():
                return False
            content_types = {
                ".html": "text/html", ".js": "text/javascript",
                ".css": "text/css", ".svg": "image/svg+xml", ".json": "application/json",
            }
            raw = target.read_bytes()
            self.send_response(200)
            self.send_header("Content-Type", content_types.get(target.suffix, "application/octet-stream"))
            self.send_header("Content-Length", str(len(raw)))
            self.end_headers()
            self.wfile.write(raw)
            return True

        def do_OPTIONS(self):
            self._send(204, "")

        def do_GET(self):
            if self._serve_static():
                return
            status, payload = handle_request(bundle, "GET", self.path, None)
            self._send(status, payload)

        def do_POST(self):
            length = int(self.headers.get("Content-Length") or 0)
            raw = self.rfile.read(length) if length else b""
            if raw:
                try:
                    body = json.loads(raw.decode("utf-8"))
                except (UnicodeDecodeError, json.JSONDecodeError) as exc:
                    self._send(400, _error_body(f"invalid JSON body: {exc}"))
                    return
            else:
                body = None
            status, payload = handle_request(bundle, "POST", self.path, body)
            self._send(status, payload)

    return Handler


def serve(bundle: DataBundle, host: str = "127.0.0.1", port: int = 8787,
          ui_dir: Optional[Path] = None):
    """Run the service until interrupted."""
    server = ThreadingHTTPServer((host, port), make_handler(bundle, ui_dir))
    print(f"aifootprint service on http://{host}:{port} (endpoints under /v1)")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
