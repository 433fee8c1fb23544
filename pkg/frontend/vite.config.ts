/// <reference types="vitest" />
import { defineConfig } from 'vite';

// The dev server proxies API calls to a locally running twingauge service;
// the production bundle is served by the service itself under /.
export default defineConfig({
  server: {
    proxy: {
      '/api': 'http://127.0.0.1:8000',
      '/healthz': 'http://127.0.0.1:8000',
    },
  },
  build: {
    outDir: 'dist',
  },
  test: {
    environment: 'node',
    globalSetup: './tests/e2e.setup.ts',
  },
});
