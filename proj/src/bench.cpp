namespace dnlsat { }
