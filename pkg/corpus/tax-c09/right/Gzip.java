package cdc;

public class Gzip implements Codec {
    public void encode(String s) {
    }
}
