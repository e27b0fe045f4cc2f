package cdc;

public interface Codec {
    void encode(String s, int level);
}
